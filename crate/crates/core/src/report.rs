//! Tabular reports shared by the CLI and the C interface. Each table has a
//! JSON form (serde) and a `|`-separated text form carrying the same fields.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansions::{genus_counts_from_polynomial, spanning_tree_terms};
use crate::poly::MPoly;
use crate::quasitree::{enumerate_quasi_trees, QuasiTree};
use crate::ribbon::{Counts, RibbonGraph};

const SEP: &str = " | ";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractedEdge {
    /// Ribbon-graph edge number, 1-based.
    pub edge: usize,
    pub a: usize,
    pub b: usize,
}

/// `G_Q` with 1-based vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractedGraph {
    pub vertices: usize,
    pub edges: Vec<ContractedEdge>,
}

impl ContractedGraph {
    fn to_text(&self) -> String {
        let mut s = format!("{}:", self.vertices);
        for e in &self.edges {
            s.push_str(&format!(" e{}({}-{})", e.edge, e.a, e.b));
        }
        s
    }

    fn from_text(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("bad G_Q field {s:?}"));
        let (v, rest) = s.split_once(':').ok_or_else(bad)?;
        let vertices = v.trim().parse().map_err(|_| bad())?;
        let edges = rest
            .split_whitespace()
            .map(|tok| {
                let tok = tok.strip_prefix('e').ok_or_else(bad)?;
                let (edge, ends) = tok.split_once('(').ok_or_else(bad)?;
                let (a, b) = ends
                    .strip_suffix(')')
                    .and_then(|x| x.split_once('-'))
                    .ok_or_else(bad)?;
                Ok(ContractedEdge {
                    edge: edge.parse().map_err(|_| bad())?,
                    a: a.parse().map_err(|_| bad())?,
                    b: b.parse().map_err(|_| bad())?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(ContractedGraph { vertices, edges })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiTreeRow {
    /// Membership per edge, written in edge order.
    pub bitstring: String,
    /// Boundary walk starting at half-edge 1.
    pub chord_diagram: Vec<usize>,
    /// L, D, ℓ, d per edge, in edge order.
    pub activity: String,
    pub genus: usize,
    pub dead_nullity: usize,
    pub dead_genus: usize,
    pub external_live: usize,
    pub contracted_graph: ContractedGraph,
    /// `T_{G_Q}(x, y)`.
    pub tutte: String,
    /// Resolution-tree leaf, e.g. `****01`.
    pub leaf: String,
    pub weight_factored: String,
    pub weight: String,
}

impl QuasiTreeRow {
    pub fn new(graph: &RibbonGraph, q: &QuasiTree) -> Self {
        let w = q.weight(graph);
        let gq = &w.contracted;
        QuasiTreeRow {
            bitstring: graph.bitstring(q.edges()),
            chord_diagram: q.diagram().labels(),
            activity: q.activity_string(graph),
            genus: q.genus(),
            dead_nullity: w.dead_nullity,
            dead_genus: w.dead_genus,
            external_live: w.external_live,
            contracted_graph: ContractedGraph {
                vertices: gq.vertex_count(),
                edges: gq
                    .edges()
                    .iter()
                    .map(|e| ContractedEdge {
                        edge: e.id + 1,
                        a: e.a + 1,
                        b: e.b + 1,
                    })
                    .collect(),
            },
            tutte: gq.tutte_polynomial().to_string().to_lowercase(),
            leaf: q.leaf().display(graph),
            weight_factored: w.factored(),
            weight: w.expanded().to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        let cycle: Vec<String> = self.chord_diagram.iter().map(usize::to_string).collect();
        [
            self.bitstring.clone(),
            format!("({})", cycle.join(",")),
            self.activity.clone(),
            format!(
                "{},{},{},{}",
                self.genus, self.dead_nullity, self.dead_genus, self.external_live
            ),
            self.contracted_graph.to_text(),
            self.tutte.clone(),
            self.leaf.clone(),
            self.weight_factored.clone(),
            self.weight.clone(),
        ]
        .join(SEP)
    }

    pub fn from_text(line: &str) -> Result<Self> {
        let bad = |what: &str| Error::Input(format!("bad {what} in quasi-tree row {line:?}"));
        let f: Vec<&str> = line.split(SEP).collect();
        let [bitstring, cycle, activity, numbers, gq, tutte, leaf, factored, weight] = f[..] else {
            return Err(bad("field count"));
        };
        let chord_diagram = cycle
            .strip_prefix('(')
            .and_then(|c| c.strip_suffix(')'))
            .ok_or_else(|| bad("cycle"))?
            .split(',')
            .map(|x| x.parse().map_err(|_| bad("cycle")))
            .collect::<Result<Vec<usize>>>()?;
        let nums = numbers
            .split(',')
            .map(|x| x.parse().map_err(|_| bad("numbers")))
            .collect::<Result<Vec<usize>>>()?;
        let [genus, dead_nullity, dead_genus, external_live] = nums[..] else {
            return Err(bad("numbers"));
        };
        Ok(QuasiTreeRow {
            bitstring: bitstring.into(),
            chord_diagram,
            activity: activity.into(),
            genus,
            dead_nullity,
            dead_genus,
            external_live,
            contracted_graph: ContractedGraph::from_text(gq)?,
            tutte: tutte.into(),
            leaf: leaf.into(),
            weight_factored: factored.into(),
            weight: weight.into(),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowOrder {
    /// Left-to-right leaves of the resolution tree.
    #[default]
    Leaf,
    Bitstring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiTreeTable {
    pub counts: Counts,
    /// 1-based edges from lowest to highest.
    pub edge_order: Vec<usize>,
    pub rows: Vec<QuasiTreeRow>,
    /// Quasi-tree counts indexed by genus.
    pub genus_histogram: Vec<usize>,
    /// Sum of the row weights.
    pub polynomial: String,
}

const QT_HEADER: &str =
    "Q | C_Q | activity | g,n,gbar,eps | G_Q | T(x,y) | leaf | weight (factored) | weight";

impl QuasiTreeTable {
    pub fn new(graph: &RibbonGraph, order: RowOrder) -> Result<Self> {
        let trees = enumerate_quasi_trees(graph)?;
        let mut rows: Vec<QuasiTreeRow> =
            trees.iter().map(|q| QuasiTreeRow::new(graph, q)).collect();
        if order == RowOrder::Bitstring {
            rows.sort_by(|a, b| a.bitstring.cmp(&b.bitstring));
        }
        let polynomial: MPoly = trees.iter().map(|q| q.weight(graph).expanded()).sum();
        Ok(QuasiTreeTable {
            counts: graph.counts(),
            edge_order: one_based_order(graph),
            rows,
            genus_histogram: crate::quasitree::genus_histogram(&trees),
            polynomial: polynomial.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&counts_line(&self.counts));
        out.push_str(&format!("edge order: {}\n", join(&self.edge_order)));
        out.push_str(QT_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.to_text());
            out.push('\n');
        }
        out.push_str(&format!(
            "quasi-trees by genus: {}\n",
            join(&self.genus_histogram)
        ));
        out.push_str(&format!("C = {}\n", self.polynomial));
        out
    }

    /// Reads back the rows of [`Self::to_text`].
    pub fn rows_from_text(text: &str) -> Result<Vec<QuasiTreeRow>> {
        let mut lines = text.lines().skip_while(|l| *l != QT_HEADER);
        if lines.next().is_none() {
            return Err(Error::Input("missing quasi-tree table header".into()));
        }
        lines
            .take_while(|l| l.contains(SEP))
            .map(QuasiTreeRow::from_text)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTreeRow {
    pub bitstring: String,
    /// Tutte activities in edge order.
    pub activity: String,
    /// `Σ_{S ⊆ ε(T)} Y^{n(T∪S)} Z^{g(T∪S)}`.
    pub weight: String,
    pub internal_activity: usize,
    /// `X^{i(T)}`.
    pub x_factor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTreeTable {
    pub edge_order: Vec<usize>,
    pub rows: Vec<SpanningTreeRow>,
    pub polynomial: String,
}

impl SpanningTreeTable {
    pub fn new(graph: &RibbonGraph) -> Result<Self> {
        let terms = spanning_tree_terms(graph)?;
        let mut rows: Vec<SpanningTreeRow> = terms
            .iter()
            .map(|t| SpanningTreeRow {
                bitstring: graph.bitstring(t.edges),
                activity: t.activity_string(graph),
                weight: t.inner.to_string(),
                internal_activity: t.internal_activity,
                x_factor: MPoly::monomial(t.internal_activity as u32, 0, 0).to_string(),
            })
            .collect();
        rows.sort_by(|a, b| a.bitstring.cmp(&b.bitstring));
        let polynomial: MPoly = terms.iter().map(|t| t.polynomial()).sum();
        Ok(SpanningTreeTable {
            edge_order: one_based_order(graph),
            rows,
            polynomial: polynomial.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("edge order: {}\n", join(&self.edge_order));
        out.push_str("T | activity | weight | X^i(T)\n");
        for r in &self.rows {
            out.push_str(&[r.bitstring.as_str(), &r.activity, &r.weight, &r.x_factor].join(SEP));
            out.push('\n');
        }
        out.push_str(&format!("C = {}\n", self.polynomial));
        out
    }
}

/// Genus-graded quasi-tree counts read from a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    /// `q(t, 0)` with ascending powers of `t`.
    pub q: String,
    /// Coefficient of `t^g`, as decimal strings.
    pub by_genus: Vec<String>,
    pub total: String,
    /// Number of quasi-trees found by the resolution tree.
    pub enumerated: usize,
}

impl CountReport {
    pub fn new(graph: &RibbonGraph, c: &MPoly) -> Result<Self> {
        let counts = genus_counts_from_polynomial(c)?;
        let mut q = MPoly::zero();
        for (g, n) in counts.iter().enumerate() {
            q.add_term([0, 0, 0, g as u32], n.clone());
        }
        let total: num_bigint::BigInt = counts.iter().sum();
        Ok(CountReport {
            q: q.to_string_ascending(),
            by_genus: counts.iter().map(ToString::to_string).collect(),
            total: total.to_string(),
            enumerated: enumerate_quasi_trees(graph)?.len(),
        })
    }

    pub fn agrees(&self) -> bool {
        self.total == self.enumerated.to_string()
    }

    pub fn to_text(&self) -> String {
        format!(
            "q(t, 0) = {}\ntotal = {}\nenumerated = {}\n",
            self.q, self.total, self.enumerated
        )
    }
}

fn one_based_order(graph: &RibbonGraph) -> Vec<usize> {
    graph
        .edge_order()
        .sequence()
        .iter()
        .map(|e| e + 1)
        .collect()
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn counts_line(c: &Counts) -> String {
    format!(
        "v={} e={} f={} k={} g={} n={}\n",
        c.vertices, c.edges, c.faces, c.components, c.genus, c.nullity
    )
}
