use std::fs;
use std::io::Read;

use cayrev::graphs::CayleyGraph;
use cayrev::groups::{AbelianGroup, GroupElement};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// On-disk graph description.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GraphSpecDocument {
    pub orders: Vec<u64>,
    pub connection: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub complement: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Designated pair, used by `decide` and `simulate` when `--pair` is absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<[Vec<i64>; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<bool>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

pub struct LoadedGraph {
    pub doc: GraphSpecDocument,
    pub graph: CayleyGraph,
    pub warnings: Vec<String>,
}

pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))
    }
}

pub fn parse_document(text: &str) -> Result<GraphSpecDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("graph spec: {e}")))
}

/// Reduces a tuple into the group, noting any entry outside `[0, n_j)`.
fn reduce_tuple(
    group: &AbelianGroup,
    tuple: &[i64],
    what: &str,
    warnings: &mut Vec<String>,
) -> Result<GroupElement, CliError> {
    if tuple.len() != group.rank() {
        return Err(CliError::Parse(format!(
            "{what} {tuple:?} has {} entries, group has rank {}",
            tuple.len(),
            group.rank()
        )));
    }
    if tuple.iter().zip(group.orders()).any(|(&x, &n)| x < 0 || x as u64 >= n) {
        warnings.push(format!("{what} {tuple:?} reduced modulo {:?}", group.orders()));
    }
    group
        .element_reduced(tuple)
        .map_err(|e| CliError::Semantic(e.to_string()))
}

pub fn build_graph(doc: GraphSpecDocument) -> Result<LoadedGraph, CliError> {
    let group = AbelianGroup::new(&doc.orders).map_err(|e| CliError::Semantic(e.to_string()))?;
    let mut warnings = Vec::new();
    let connection = doc
        .connection
        .iter()
        .map(|t| reduce_tuple(&group, t, "connection element", &mut warnings))
        .collect::<Result<Vec<_>, _>>()?;
    let mut graph = CayleyGraph::new(group, connection).map_err(|e| CliError::Semantic(e.to_string()))?;
    if doc.complement {
        graph = graph.complement();
    }
    Ok(LoadedGraph { doc, graph, warnings })
}

pub fn load_graph(path: &str) -> Result<LoadedGraph, CliError> {
    build_graph(parse_document(&read_source(path)?)?)
}

/// Accepts `a,b` as vertex indices, or `2k` comma-separated coordinates for
/// a rank-`k` group.
pub fn parse_pair(group: &AbelianGroup, text: &str) -> Result<(GroupElement, GroupElement), CliError> {
    let parts = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Parse(format!("bad pair entry {p:?} in {text:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let k = group.rank();
    if parts.len() == 2 {
        let at = |i: i64| {
            usize::try_from(i)
                .ok()
                .and_then(|i| group.element_at(i).ok())
                .ok_or_else(|| CliError::Semantic(format!("vertex {i} out of range for order {}", group.order())))
        };
        return Ok((at(parts[0])?, at(parts[1])?));
    }
    if parts.len() == 2 * k {
        let mut sink = Vec::new();
        let a = reduce_tuple(group, &parts[..k], "pair vertex", &mut sink)?;
        let b = reduce_tuple(group, &parts[k..], "pair vertex", &mut sink)?;
        if !sink.is_empty() {
            return Err(CliError::Semantic(format!("pair {text:?} lies outside the group")));
        }
        return Ok((a, b));
    }
    Err(CliError::Parse(format!(
        "pair {text:?} needs 2 indices or {} coordinates",
        2 * k
    )))
}

pub fn designated_pair(loaded: &LoadedGraph) -> Result<Option<(GroupElement, GroupElement)>, CliError> {
    let Some([a, b]) = &loaded.doc.pair else {
        return Ok(None);
    };
    let group = loaded.graph.group();
    let mut sink = Vec::new();
    let a = reduce_tuple(group, a, "pair vertex", &mut sink)?;
    let b = reduce_tuple(group, b, "pair vertex", &mut sink)?;
    if !sink.is_empty() {
        return Err(CliError::Semantic("designated pair lies outside the group".into()));
    }
    Ok(Some((a, b)))
}
