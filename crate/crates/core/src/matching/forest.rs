//! Edmonds' alternating forest with blossom shrinking.
//!
//! Blossoms are tracked with a union-find structure whose representatives
//! are always the current blossom bases. Two search modes share the forest:
//!
//! * augmenting search from a single exposed root, which keeps the parent
//!   pointers needed to flip the augmenting path;
//! * even-reachability from every exposed vertex at once, which only needs
//!   labels and bases and therefore walks blossom bases directly.

use std::collections::VecDeque;
use std::mem;

use crate::graph::Graph;

pub(crate) const NONE: usize = usize::MAX;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Label {
    Unreached,
    Even,
    Odd,
}

/// Raised by the multi-root search when two trees touch along an edge
/// between even vertices, i.e. the matching admits an augmenting path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct AugmentingPath;

pub(crate) struct Forest<'g> {
    graph: &'g Graph,
    label: Vec<Label>,
    parent: Vec<usize>,
    base: Vec<usize>,
    root: Vec<usize>,
    stamp: Vec<u32>,
    now: u32,
    queue: VecDeque<usize>,
    merged: Vec<usize>,
}

impl<'g> Forest<'g> {
    pub(crate) fn new(graph: &'g Graph) -> Self {
        let n = graph.vertex_count();
        Forest {
            graph,
            label: vec![Label::Unreached; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            root: vec![NONE; n],
            stamp: vec![0; n],
            now: 0,
            queue: VecDeque::new(),
            merged: Vec::new(),
        }
    }

    fn reset(&mut self) {
        self.label.fill(Label::Unreached);
        self.parent.fill(NONE);
        self.root.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.base[v] != v {
            let up = self.base[self.base[v]];
            self.base[v] = up;
            v = up;
        }
        v
    }

    fn plant(&mut self, r: usize) {
        self.label[r] = Label::Even;
        self.root[r] = r;
        self.queue.push_back(r);
    }

    /// Base of the smallest blossom containing both `a` and `b`, found by
    /// walking up the two tree paths alternately.
    fn lca(&mut self, mate: &[usize], a: usize, b: usize) -> usize {
        self.now = self.now.wrapping_add(1);
        if self.now == 0 {
            self.stamp.fill(0);
            self.now = 1;
        }
        let (mut a, mut b) = (a, b);
        loop {
            if a != NONE {
                a = self.find(a);
                if self.stamp[a] == self.now {
                    return a;
                }
                self.stamp[a] = self.now;
                a = match mate[a] {
                    NONE => NONE,
                    m => self.parent[m],
                };
            }
            mem::swap(&mut a, &mut b);
        }
    }

    /// Walks the half of a blossom from `v` down to `top`, recording the
    /// cross pointers needed to route an augmenting path through it. The
    /// bases passed on the way are collected in `merged`; they must not be
    /// united with `top` before both halves are walked, or the second walk
    /// would stop early.
    fn shrink_tracked(
        &mut self,
        mate: &[usize],
        mut v: usize,
        mut w: usize,
        top: usize,
        merged: &mut Vec<usize>,
    ) {
        loop {
            let bv = self.find(v);
            if bv == top {
                return;
            }
            self.parent[v] = w;
            let m = mate[v];
            if self.label[m] == Label::Odd {
                self.label[m] = Label::Even;
                self.queue.push_back(m);
            }
            merged.push(bv);
            merged.push(self.find(m));
            w = m;
            v = self.parent[m];
        }
    }

    /// Label-only shrinking: jumps from base to base.
    fn shrink_bases(&mut self, mate: &[usize], v: usize, top: usize) {
        let mut v = self.find(v);
        while v != top {
            let m = mate[v];
            if self.label[m] == Label::Odd {
                self.label[m] = Label::Even;
                self.queue.push_back(m);
            }
            self.base[v] = top;
            let bm = self.find(m);
            if bm != top {
                self.base[bm] = top;
            }
            v = self.find(self.parent[m]);
        }
    }

    /// Searches for an augmenting path from the exposed vertex `r`, avoiding
    /// `excluded`, and flips it into `mate` when found.
    pub(crate) fn augment_from(&mut self, mate: &mut [usize], r: usize, excluded: usize) -> bool {
        debug_assert_eq!(mate[r], NONE);
        self.reset();
        self.plant(r);
        let graph = self.graph;
        while let Some(x) = self.queue.pop_front() {
            for &y in graph.neighbors(x.into()) {
                let y = y.index();
                if y == excluded {
                    continue;
                }
                match self.label[y] {
                    Label::Unreached => {
                        self.parent[y] = x;
                        if mate[y] == NONE {
                            flip(mate, &self.parent, y);
                            return true;
                        }
                        self.label[y] = Label::Odd;
                        let z = mate[y];
                        self.label[z] = Label::Even;
                        self.queue.push_back(z);
                    }
                    Label::Even => {
                        let (bx, by) = (self.find(x), self.find(y));
                        if bx == by {
                            continue;
                        }
                        let top = self.lca(mate, bx, by);
                        let mut merged = mem::take(&mut self.merged);
                        self.shrink_tracked(mate, x, y, top, &mut merged);
                        self.shrink_tracked(mate, y, x, top, &mut merged);
                        for b in merged.drain(..) {
                            let root = self.find(b);
                            if root != top {
                                self.base[root] = top;
                            }
                        }
                        self.merged = merged;
                    }
                    Label::Odd => {}
                }
            }
        }
        false
    }

    /// Grows the forest rooted at every exposed vertex, ignoring `excluded`
    /// (pass [`NONE`] to keep all vertices). Returns the even flags, which
    /// mark exactly the vertices reachable from an exposed vertex by an
    /// even alternating path.
    pub(crate) fn even_reach(
        &mut self,
        mate: &[usize],
        excluded: usize,
    ) -> Result<Vec<bool>, AugmentingPath> {
        self.reset();
        let n = self.graph.vertex_count();
        for v in 0..n {
            if v != excluded && mate[v] == NONE {
                self.plant(v);
            }
        }
        let graph = self.graph;
        while let Some(x) = self.queue.pop_front() {
            for &y in graph.neighbors(x.into()) {
                let y = y.index();
                if y == excluded {
                    continue;
                }
                match self.label[y] {
                    Label::Unreached => {
                        let z = mate[y];
                        if z == NONE {
                            return Err(AugmentingPath);
                        }
                        let r = self.root[x];
                        self.label[y] = Label::Odd;
                        self.parent[y] = x;
                        self.root[y] = r;
                        self.label[z] = Label::Even;
                        self.root[z] = r;
                        self.queue.push_back(z);
                    }
                    Label::Even => {
                        let (bx, by) = (self.find(x), self.find(y));
                        if bx == by {
                            continue;
                        }
                        if self.root[bx] != self.root[by] {
                            return Err(AugmentingPath);
                        }
                        let top = self.lca(mate, bx, by);
                        self.shrink_bases(mate, bx, top);
                        self.shrink_bases(mate, by, top);
                    }
                    Label::Odd => {}
                }
            }
        }
        Ok(self.label.iter().map(|&l| l == Label::Even).collect())
    }
}

fn flip(mate: &mut [usize], parent: &[usize], mut y: usize) {
    while y != NONE {
        let x = parent[y];
        let next = mate[x];
        mate[y] = x;
        mate[x] = y;
        y = next;
    }
}

/// Maximum cardinality matching as a mate array: greedy start, then one
/// augmenting search per vertex left exposed.
pub(crate) fn maximum_mates(graph: &Graph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] != NONE {
            continue;
        }
        if let Some(w) = graph
            .neighbors(v.into())
            .iter()
            .map(|w| w.index())
            .find(|&w| mate[w] == NONE)
        {
            mate[v] = w;
            mate[w] = v;
        }
    }
    let mut forest = Forest::new(graph);
    // A vertex from which no augmenting path exists stays unmatched in every
    // later matching produced by augmentation, so one pass suffices.
    for v in 0..n {
        if mate[v] == NONE {
            forest.augment_from(&mut mate, v, NONE);
        }
    }
    mate
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_matching(graph: &Graph, mate: &[usize]) -> bool {
        mate.iter()
            .enumerate()
            .all(|(v, &m)| m == NONE || (mate[m] == v && graph.has_edge(v.into(), m.into())))
    }

    // Nested blossoms: the outer blossom's second half runs through an
    // inner blossom whose base must still be walked past.
    #[test]
    fn augments_through_nested_blossom() {
        let edges = [
            (0, 3),
            (0, 4),
            (0, 10),
            (1, 2),
            (1, 5),
            (1, 6),
            (1, 8),
            (1, 9),
            (2, 5),
            (2, 7),
            (2, 10),
            (3, 5),
            (3, 7),
            (3, 8),
            (3, 10),
            (4, 8),
            (5, 6),
            (5, 8),
            (7, 10),
        ];
        let g = Graph::from_edges(11, &edges).unwrap();
        let mut mate = vec![NONE; 11];
        for (u, v) in [(0, 3), (1, 2), (5, 6), (7, 10)] {
            mate[u] = v;
            mate[v] = u;
        }
        let mut forest = Forest::new(&g);
        assert!(forest.augment_from(&mut mate, 8, 4));
        assert!(is_matching(&g, &mate));
        assert_eq!(mate[8], 3);
        assert_eq!(mate[9], 1);
        assert_eq!(mate[4], NONE);
    }

    #[test]
    fn odd_cycle_with_stem() {
        // Triangle 1-2-3 with a stem 0-1 and a tail 3-4.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        let mut mate = vec![NONE; 5];
        mate[1] = 2;
        mate[2] = 1;
        assert!(Forest::new(&g).augment_from(&mut mate, 0, NONE));
        assert!(is_matching(&g, &mate));
        assert_eq!(mate.iter().filter(|&&m| m != NONE).count(), 4);
    }

    // From an arbitrary starting matching, augmenting once from each exposed
    // vertex (in any order) must reach the maximum.
    #[test]
    fn augmentation_reaches_maximum_from_random_starts() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..4000 {
            let n = rng.gen_range(1..=11);
            let p = rng.gen_range(0.1..0.8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let nu = crate::oracle::Oracle::new(&g).unwrap().nu();

            let mut mate = vec![NONE; n];
            edges.shuffle(&mut rng);
            for &(u, v) in edges.iter().take(rng.gen_range(0..=edges.len())) {
                if mate[u] == NONE && mate[v] == NONE {
                    mate[u] = v;
                    mate[v] = u;
                }
            }
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut forest = Forest::new(&g);
            for v in order {
                if mate[v] == NONE {
                    forest.augment_from(&mut mate, v, NONE);
                }
            }
            assert!(is_matching(&g, &mate));
            let size = mate.iter().filter(|&&m| m != NONE).count() / 2;
            assert_eq!(size, nu, "{edges:?}");
            assert!(forest.even_reach(&mate, NONE).is_ok());
        }
    }
}
