//! Test-only graph sources: all connected graphs up to isomorphism on few
//! vertices, and seeded random graphs.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use basilica::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Known counts of connected unlabelled graphs on 1..=8 vertices.
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

/// Adjacency bitmasks, one per vertex.
pub type Masks = Vec<u16>;

pub fn to_graph(adj: &[u16]) -> Graph {
    let n = adj.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] & (1 << v) != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Stable colour refinement starting from degrees; colours are ranks of
/// invariant signatures, so they do not depend on vertex numbering.
fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] & (1 << w) != 0)
                    .map(|w| color[w])
                    .collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let before = color.iter().collect::<HashSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        color = next;
    }
}

/// Lexicographically largest adjacency code over all orderings that list
/// colour classes in colour order.
pub fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    let color = refine(adj);
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&v| color[v]);
    let slot_color: Vec<usize> = slots.iter().map(|&v| color[v]).collect();

    struct Search<'a> {
        adj: &'a [u16],
        color: &'a [usize],
        slot_color: &'a [usize],
        order: Vec<usize>,
        used: u16,
        best: Option<u64>,
    }

    impl Search<'_> {
        // Bits are emitted column by column, so a prefix is fixed as soon
        // as its last vertex is placed; prune on prefixes below the best.
        fn go(&mut self, code: u64, bits: u32) {
            let n = self.adj.len();
            let p = self.order.len();
            if p == n {
                if self.best.is_none_or(|b| code > b) {
                    self.best = Some(code);
                }
                return;
            }
            let total = (n * (n - 1) / 2) as u32;
            for v in 0..n {
                if self.used & (1 << v) != 0 || self.color[v] != self.slot_color[p] {
                    continue;
                }
                let mut next = code;
                for &u in &self.order {
                    next = (next << 1) | u64::from(self.adj[u] & (1 << v) != 0);
                }
                let placed = bits + p as u32;
                if let Some(best) = self.best {
                    let shift = total - placed;
                    if next < best >> shift {
                        continue;
                    }
                }
                self.order.push(v);
                self.used |= 1 << v;
                self.go(next, placed);
                self.used &= !(1 << v);
                self.order.pop();
            }
        }
    }

    let mut search = Search {
        adj,
        color: &color,
        slot_color: &slot_color,
        order: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.go(0, 0);
    ((n as u64) << 56) | search.best.unwrap_or(0)
}

fn extend(levels: &[Vec<Masks>]) -> Vec<Masks> {
    let last = levels.last().unwrap();
    let n = last[0].len() + 1;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for adj in last {
        for hood in 1u16..(1 << (n - 1)) {
            let mut next = adj.clone();
            for (u, mask) in next.iter_mut().enumerate() {
                if hood & (1 << u) != 0 {
                    *mask |= 1 << (n - 1);
                }
            }
            next.push(hood);
            if seen.insert(canonical_code(&next)) {
                out.push(next);
            }
        }
    }
    out
}

/// Representatives of every connected graph on `1..=8` vertices, indexed by
/// `n - 1`. Built once per test binary.
pub fn connected_graphs() -> &'static [Vec<Masks>] {
    static LEVELS: OnceLock<Vec<Vec<Masks>>> = OnceLock::new();
    LEVELS.get_or_init(|| {
        let mut levels = vec![vec![vec![0u16]]];
        while levels.len() < 8 {
            let next = extend(&levels);
            levels.push(next);
        }
        for (i, level) in levels.iter().enumerate() {
            assert_eq!(
                level.len(),
                CONNECTED_COUNTS[i],
                "connected graphs on {} vertices",
                i + 1
            );
        }
        levels
    })
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph on an even number `n` of vertices with `m` edges that
/// contains a planted perfect matching; vertex numbering is shuffled.
pub fn random_factorizable(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    assert!(n.is_multiple_of(2) && m >= n / 2 && m <= n * (n - 1) / 2);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = HashSet::new();
    for i in 0..n / 2 {
        let (u, v) = (perm[2 * i], perm[2 * i + 1]);
        edges.insert((u.min(v), u.max(v)));
    }
    while edges.len() < m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let mut list: Vec<_> = edges.into_iter().collect();
    list.sort_unstable();
    Graph::from_edges(n, &list).unwrap()
}
