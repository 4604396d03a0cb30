//! Graph documents: `{"sigma0": [[1,3,2,5],...], "sigma1": [[1,2],...], "edge_order": [4,2,3,1,5,6]}`.
//!
//! Half-edges and edges are 1-based. `edge_order` lists edges from lowest to
//! highest; edge `i` is the `i`-th pair when pairs are sorted by their smaller
//! half-edge.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ribbon::{EdgeOrder, RibbonGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub sigma0: Vec<Vec<usize>>,
    pub sigma1: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_order: Option<Vec<usize>>,
}

impl GraphDocument {
    pub fn from_graph(graph: &RibbonGraph) -> Self {
        let sequence = graph.edge_order().sequence();
        let natural = sequence.iter().enumerate().all(|(r, &e)| r == e);
        GraphDocument {
            sigma0: graph.vertex_cycles(),
            sigma1: graph
                .edge_pairs()
                .into_iter()
                .map(|(a, b)| [a, b])
                .collect(),
            edge_order: (!natural).then(|| sequence.iter().map(|e| e + 1).collect()),
        }
    }

    pub fn build(&self) -> Result<RibbonGraph> {
        let pairs: Vec<(usize, usize)> = self.sigma1.iter().map(|p| (p[0], p[1])).collect();
        let graph = RibbonGraph::from_cycles(&self.sigma0, &pairs)?;
        match &self.edge_order {
            None => Ok(graph),
            Some(order) => {
                let order = order_from_one_based(order, graph.edge_count())?;
                graph.with_edge_order(order)
            }
        }
    }
}

pub fn parse_graph_json(text: &str) -> Result<RibbonGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    doc.build()
}

pub fn read_graph(path: &Path) -> Result<RibbonGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_graph_json(&text)
}

pub fn graph_to_json(graph: &RibbonGraph) -> String {
    serde_json::to_string(&GraphDocument::from_graph(graph)).expect("graph document serializes")
}

pub fn order_from_one_based(order: &[usize], edge_count: usize) -> Result<EdgeOrder> {
    if order.len() != edge_count || order.contains(&0) {
        return Err(Error::BadEdgeOrder(edge_count));
    }
    EdgeOrder::from_sequence(order.iter().map(|e| e - 1).collect())
}

/// Parses `"4,2,3,1,5,6"`.
pub fn parse_order(text: &str, edge_count: usize) -> Result<EdgeOrder> {
    let order = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("bad edge index {s:?} in order")))
        })
        .collect::<Result<Vec<_>>>()?;
    order_from_one_based(&order, edge_count)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"{"sigma0": [[1,3,2,5],[7,9],[10,4,12,8,6,11]],
        "sigma1": [[1,2],[3,4],[5,6],[7,8],[9,10],[11,12]]}"#;

    #[test]
    fn parses_example() {
        let g = parse_graph_json(EXAMPLE).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.genus()), (3, 6, 2));
    }

    #[test]
    fn round_trip_with_order() {
        let g = parse_graph_json(EXAMPLE)
            .unwrap()
            .with_edge_order(parse_order("4,2,3,1,5,6", 6).unwrap())
            .unwrap();
        let text = graph_to_json(&g);
        assert!(text.contains("\"edge_order\":[4,2,3,1,5,6]"));
        let back = parse_graph_json(&text).unwrap();
        assert_eq!(back.edge_order(), g.edge_order());
        assert_eq!(back.vertex_cycles(), g.vertex_cycles());
    }

    #[test]
    fn natural_order_is_omitted() {
        let g = parse_graph_json(EXAMPLE).unwrap();
        assert!(!graph_to_json(&g).contains("edge_order"));
    }

    #[test]
    fn trivial_graph() {
        let g = parse_graph_json(r#"{"sigma0": [], "sigma1": []}"#).unwrap();
        assert!(g.is_trivial());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph_json("{"), Err(Error::Input(_))));
        assert!(matches!(
            parse_graph_json(r#"{"sigma0": [[1,2]], "sigma1": [[1,2]], "extra": 1}"#),
            Err(Error::Input(_))
        ));
        assert_eq!(parse_order("1,1", 2).unwrap_err(), Error::BadEdgeOrder(2));
        assert_eq!(parse_order("0,1", 2).unwrap_err(), Error::BadEdgeOrder(2));
        assert_eq!(parse_order("1", 2).unwrap_err(), Error::BadEdgeOrder(2));
        assert!(matches!(parse_order("1,x", 2), Err(Error::Input(_))));
    }
}
