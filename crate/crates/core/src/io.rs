//! Readers and writers for METIS, hMETIS and SNAP-style edge lists.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::{Duplicates, Graph, Hypergraph, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Metis,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "metis" => Ok(GraphFormat::Metis),
            "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(Error::Config(format!("unknown graph format `{other}`"))),
        }
    }
}

/// A graph together with the external label of every dense node ID.
///
/// METIS files are labelled `0..n` (the 1-based file IDs minus one). Edge
/// lists keep the IDs found in the file, compacted in ascending order.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

impl LoadedGraph {
    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    /// Dense ID of an external label.
    pub fn node_of_label(&self, label: u64) -> Option<usize> {
        // Labels are strictly increasing for both formats.
        self.labels.binary_search(&label).ok()
    }
}

pub fn load_graph(path: impl AsRef<Path>, format: GraphFormat) -> Result<LoadedGraph> {
    let reader = BufReader::new(File::open(path)?);
    read_graph(reader, format)
}

pub fn read_graph<R: BufRead>(reader: R, format: GraphFormat) -> Result<LoadedGraph> {
    match format {
        GraphFormat::Metis => {
            let graph = read_metis(reader)?;
            let labels = (0..graph.n() as u64).collect();
            Ok(LoadedGraph { graph, labels })
        }
        GraphFormat::EdgeList => read_edge_list(reader),
    }
}

fn parse_num<T: FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

/// Reads a METIS graph. Supported `fmt` codes: none/`0`, `1` (edge weights),
/// `10` (node weights) and `11` (both). Lines starting with `%` are comments.
/// Parallel edges, self-loops and one-directional entries are normalized
/// away, but the number of adjacency entries must equal `2m`.
pub fn read_metis<R: BufRead>(reader: R) -> Result<Graph> {
    let mut lines = reader.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut header = None;
    for (no, line) in lines.by_ref() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        header = Some((no, t.to_string()));
        break;
    }
    let (hline, header) = header.ok_or_else(|| Error::parse(1, "missing METIS header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() < 2 || toks.len() > 4 {
        return Err(Error::parse(hline, "header must be `n m [fmt [ncon]]`"));
    }
    let n: usize = parse_num(toks[0], hline, "node count")?;
    let m: usize = parse_num(toks[1], hline, "edge count")?;
    let fmt = toks.get(2).copied().unwrap_or("0");
    if fmt.len() > 3 || !fmt.chars().all(|c| c == '0' || c == '1') {
        return Err(Error::parse(hline, format!("invalid fmt `{fmt}`")));
    }
    let code: u32 = parse_num(fmt, hline, "fmt")?;
    if code >= 100 {
        return Err(Error::parse(hline, "node sizes (fmt 1xx) are not supported"));
    }
    let has_ewgt = code % 10 == 1;
    let has_vwgt = code / 10 == 1;
    if let Some(ncon) = toks.get(3) {
        let ncon: usize = parse_num(ncon, hline, "ncon")?;
        if ncon != 1 {
            return Err(Error::parse(hline, "only one node-weight constraint is supported"));
        }
    }

    let mut edges = Vec::with_capacity(m);
    let mut vwgt = vec![1; n];
    let mut entries = 0usize;
    let mut v = 0usize;
    for (no, line) in lines {
        let line = line?;
        let t = line.trim();
        if t.starts_with('%') {
            continue;
        }
        if v == n {
            if t.is_empty() {
                continue;
            }
            return Err(Error::parse(no, format!("more than {n} node lines")));
        }
        let mut toks = t.split_whitespace();
        if has_vwgt {
            let w: Weight = match toks.next() {
                Some(tok) => parse_num(tok, no, "node weight")?,
                None => return Err(Error::parse(no, "missing node weight")),
            };
            if w < 0 {
                return Err(Error::parse(no, "negative node weight"));
            }
            vwgt[v] = w;
        }
        while let Some(tok) = toks.next() {
            let u: usize = parse_num(tok, no, "neighbor")?;
            if u == 0 || u > n {
                return Err(Error::parse(no, format!("neighbor {u} outside 1..={n}")));
            }
            let w = if has_ewgt {
                let tok = toks
                    .next()
                    .ok_or_else(|| Error::parse(no, "missing edge weight"))?;
                let w: Weight = parse_num(tok, no, "edge weight")?;
                if w <= 0 {
                    return Err(Error::parse(no, "edge weight must be positive"));
                }
                w
            } else {
                1
            };
            entries += 1;
            edges.push((v, u - 1, w));
        }
        v += 1;
    }
    if v < n {
        return Err(Error::Integrity(format!("expected {n} node lines, found {v}")));
    }
    if entries != 2 * m {
        return Err(Error::Integrity(format!(
            "header declares {m} edges but adjacency lists hold {entries} entries (expected {})",
            2 * m
        )));
    }
    Ok(Graph::from_edges(n, edges, Duplicates::KeepFirst).with_node_weights(vwgt))
}

/// Reads whitespace-separated `u v` pairs; `#` and `%` start comment lines.
/// Any extra columns are ignored. Node IDs may be sparse.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut raw: Vec<(u64, u64)> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let no = i + 1;
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') || t.starts_with('%') {
            continue;
        }
        let mut toks = t.split_whitespace();
        let a: u64 = parse_num(toks.next().unwrap_or_default(), no, "node id")?;
        let b: u64 = match toks.next() {
            Some(tok) => parse_num(tok, no, "node id")?,
            None => return Err(Error::parse(no, "expected two node ids")),
        };
        raw.push((a, b));
    }
    let mut labels: Vec<u64> = raw.iter().flat_map(|&(a, b)| [a, b]).collect();
    labels.sort_unstable();
    labels.dedup();
    let index: FxHashMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let graph = Graph::from_edges(
        labels.len(),
        raw.iter().map(|(a, b)| (index[a], index[b], 1)),
        Duplicates::KeepFirst,
    );
    Ok(LoadedGraph { graph, labels })
}

/// Canonical METIS writer: sorted neighbor lists, weights only when some
/// weight differs from 1.
pub fn write_metis<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    let ewgt = !g.has_unit_edge_weights();
    let vwgt = !g.has_unit_node_weights();
    match (vwgt, ewgt) {
        (false, false) => writeln!(out, "{} {}", g.n(), g.m())?,
        (false, true) => writeln!(out, "{} {} 1", g.n(), g.m())?,
        (true, false) => writeln!(out, "{} {} 10", g.n(), g.m())?,
        (true, true) => writeln!(out, "{} {} 11", g.n(), g.m())?,
    }
    let mut line = String::new();
    for v in 0..g.n() {
        line.clear();
        if vwgt {
            line.push_str(&g.node_weight(v).to_string());
        }
        for (u, w) in g.edges_of(v) {
            if !line.is_empty() {
                line.push(' ');
            }
            line.push_str(&(u + 1).to_string());
            if ewgt {
                line.push(' ');
                line.push_str(&w.to_string());
            }
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// hMETIS writer: header `nets nodes fmt`, then one line per net with its
/// weight followed by 1-based pins, then node weights when `fmt` is `11`.
pub fn write_hmetis<W: Write>(h: &Hypergraph, mut out: W) -> Result<()> {
    let vwgt = h.node_weights().iter().any(|&w| w != 1);
    writeln!(
        out,
        "{} {} {}",
        h.net_count(),
        h.n(),
        if vwgt { "11" } else { "1" }
    )?;
    for (pins, w) in h.nets() {
        write!(out, "{w}")?;
        for &p in pins {
            write!(out, " {}", p + 1)?;
        }
        writeln!(out)?;
    }
    if vwgt {
        for &w in h.node_weights() {
            writeln!(out, "{w}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn metis(s: &str) -> Result<Graph> {
        read_metis(s.as_bytes())
    }

    #[test]
    fn path_graph() {
        let g = metis("3 2\n2\n1 3\n2\n").unwrap();
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.neighbors(2), &[1]);
    }

    #[test]
    fn comments_and_isolated_nodes() {
        let g = metis("% comment\n3 1\n2\n1\n\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn weighted_formats() {
        let g = metis("2 1 11\n4 2 7\n5 1 7\n").unwrap();
        assert_eq!(g.node_weights(), &[4, 5]);
        assert_eq!(g.edge_weight(0, 1), Some(7));
        let g = metis("2 1 1\n2 3\n1 3\n").unwrap();
        assert_eq!(g.edge_weight(1, 0), Some(3));
    }

    #[test]
    fn edge_count_mismatch_is_integrity_error() {
        let err = metis("3 3\n2\n1 3\n2\n").unwrap_err();
        assert!(matches!(err, Error::Integrity(_)), "{err}");
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = metis("3 2\n2\n1 x\n2\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other}"),
        }
        let err = metis("3 2\n2\n1 9\n2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn missing_node_lines() {
        assert!(matches!(metis("3 1\n2\n1\n"), Err(Error::Integrity(_))));
    }

    #[test]
    fn edge_list_dedup_and_comments() {
        let text = "# SNAP\n0 1\n1 2\n2 0\n1 2\n3 3\n";
        let lg = read_edge_list(text.as_bytes()).unwrap();
        assert_eq!(lg.graph.n(), 4);
        assert_eq!(lg.graph.m(), 3);
    }

    #[test]
    fn edge_list_sparse_ids() {
        let lg = read_edge_list("10 500\n500 7\n".as_bytes()).unwrap();
        assert_eq!(lg.labels, vec![7, 10, 500]);
        assert_eq!(lg.node_of_label(500), Some(2));
        assert!(lg.graph.has_edge(0, 2));
        assert!(lg.graph.has_edge(1, 2));
        assert!(!lg.graph.has_edge(0, 1));
    }

    #[test]
    fn edge_list_bad_line() {
        let err = read_edge_list("1 2\n3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn hmetis_output() {
        let h = Hypergraph::from_nets(3, [(vec![0, 1, 2], 2), (vec![1, 2], 1)]);
        let mut buf = Vec::new();
        write_hmetis(&h, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "2 3 1\n2 1 2 3\n1 2 3\n");
    }
}
