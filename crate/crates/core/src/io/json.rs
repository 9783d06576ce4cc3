use serde::Serialize;

use crate::decomposition::BasilicaDecomposition;
use crate::graph::{Graph, VertexSet};

/// Serializable view of a decomposition. Label lists are sorted
/// lexicographically; component and class indices follow the
/// decomposition's own numbering so that references stay valid.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonDocument {
    pub matching: Vec<[String; 2]>,
    pub deficiency: usize,
    pub gallai_edmonds: JsonFamily,
    pub components: Vec<JsonComponent>,
    pub classes: Vec<JsonClass>,
    pub order: JsonOrder,
    pub attachments: Vec<JsonAttachment>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonFamily {
    #[serde(rename = "D")]
    pub d: Vec<String>,
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "C")]
    pub c: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonComponent {
    pub id: usize,
    pub vertices: Vec<String>,
    pub consistent: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonClass {
    pub component: usize,
    pub vertices: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonOrder {
    pub upper_sets: Vec<Vec<usize>>,
    pub hasse_edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonAttachment {
    pub lower: usize,
    pub component_vertices: Vec<String>,
    pub class_index: usize,
}

fn labels(graph: &Graph, set: &VertexSet) -> Vec<String> {
    let mut out: Vec<String> = set.iter().map(|v| graph.label(v).to_owned()).collect();
    out.sort();
    out
}

pub fn to_document(d: &BasilicaDecomposition) -> JsonDocument {
    let g = &d.graph;
    let mut matching: Vec<[String; 2]> = d
        .matching
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let mut pair = [g.label(u).to_owned(), g.label(v).to_owned()];
            pair.sort();
            pair
        })
        .collect();
    matching.sort();

    let mut attachments: Vec<JsonAttachment> = d
        .attachments
        .iter()
        .map(|a| JsonAttachment {
            lower: a.lower,
            component_vertices: labels(g, &a.up_component),
            class_index: a.class,
        })
        .collect();
    attachments
        .sort_by(|x, y| (x.lower, &x.component_vertices).cmp(&(y.lower, &y.component_vertices)));

    let mut hasse_edges: Vec<[usize; 2]> =
        d.poset.hasse_edges().iter().map(|&(a, b)| [a, b]).collect();
    hasse_edges.sort();

    JsonDocument {
        matching,
        deficiency: d.deficiency(),
        gallai_edmonds: JsonFamily {
            d: labels(g, &d.family.d),
            a: labels(g, &d.family.a),
            c: labels(g, &d.family.c),
        },
        components: d
            .components
            .iter()
            .map(|c| JsonComponent {
                id: c.id,
                vertices: labels(g, &c.vertices),
                consistent: c.consistent,
            })
            .collect(),
        classes: d
            .classes
            .iter()
            .map(|c| JsonClass {
                component: c.component,
                vertices: labels(g, &c.vertices),
            })
            .collect(),
        order: JsonOrder {
            upper_sets: d
                .poset
                .upper_sets()
                .iter()
                .map(|s| s.ones().collect())
                .collect(),
            hasse_edges,
        },
        attachments,
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn emit_json(d: &BasilicaDecomposition) -> String {
    let mut out =
        serde_json::to_string_pretty(&to_document(d)).expect("document serializes to JSON");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose;
    use crate::io::parse_edge_list;
    use serde_json::{json, Value};

    fn emit(text: &str) -> Value {
        let g = parse_edge_list(text).unwrap();
        serde_json::from_str(&emit_json(&decompose(&g).unwrap())).unwrap()
    }

    #[test]
    fn c4() {
        let v = emit("1 2\n2 3\n3 4\n4 1");
        assert_eq!(v["components"].as_array().unwrap().len(), 1);
        assert_eq!(v["deficiency"], 0);
        let classes: Vec<&Value> = v["classes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| &c["vertices"])
            .collect();
        assert_eq!(classes, [&json!(["1", "3"]), &json!(["2", "4"])]);
        assert_eq!(v["order"]["hasse_edges"], json!([]));
        assert_eq!(v["order"]["upper_sets"], json!([[0]]));
    }

    #[test]
    fn house() {
        let v = emit("a b\nb c\nb p\np q\nq b");
        let comps = v["components"].as_array().unwrap();
        let id =
            |names: Value| comps.iter().find(|c| c["vertices"] == names).unwrap()["id"].clone();
        let low = id(json!(["a", "b", "c"]));
        let high = id(json!(["p", "q"]));
        assert_eq!(v["order"]["hasse_edges"], json!([[low, high]]));
        assert_eq!(v["gallai_edmonds"]["D"], json!(["a", "c"]));
        assert_eq!(v["gallai_edmonds"]["A"], json!(["b"]));
        assert_eq!(v["gallai_edmonds"]["C"], json!(["p", "q"]));
        let att = &v["attachments"][0];
        assert_eq!(att["component_vertices"], json!(["p", "q"]));
        let class = &v["classes"][att["class_index"].as_u64().unwrap() as usize];
        assert_eq!(class["vertices"], json!(["b"]));
    }

    #[test]
    fn empty_graph() {
        let v = emit("");
        assert_eq!(v["deficiency"], 0);
        for key in ["matching", "components", "classes", "attachments"] {
            assert_eq!(v[key], json!([]), "{key}");
        }
        assert_eq!(v["order"], json!({"upper_sets": [], "hasse_edges": []}));
        assert_eq!(v["gallai_edmonds"], json!({"D": [], "A": [], "C": []}));
    }

    #[test]
    fn key_order_is_stable() {
        let g = parse_edge_list("a b").unwrap();
        let text = emit_json(&decompose(&g).unwrap());
        let keys = [
            "\"matching\"",
            "\"deficiency\"",
            "\"gallai_edmonds\"",
            "\"components\"",
            "\"classes\"",
            "\"order\"",
            "\"attachments\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }
}
