//! Input parsing for the `dls` binary: graph6 strings, `u-v,u-v` edge lists
//! and `kind:params` family descriptors.

use anyhow::{bail, Context, Result};
use dls_core::families::FamilySpec;
use dls_core::g6;
use dls_core::graph::Graph;

/// Parses one graph given either as a graph6 line or as an edge list.
/// Edge lists look like `0-1,1-2,2-3`; `n` fixes the order when it exceeds
/// the largest endpoint plus one.
pub fn parse_graph(text: &str, edge_list: bool, n: Option<usize>) -> Result<Graph> {
    if edge_list {
        parse_edge_list(text, n)
    } else {
        g6::parse_graph6(text.trim().as_bytes()).context("invalid graph6 input")
    }
}

fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_endpoint = 0usize;
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (u, v) = piece
            .split_once('-')
            .with_context(|| format!("edge {piece:?} is not of the form u-v"))?;
        let u: usize = u.trim().parse().with_context(|| format!("bad endpoint in {piece:?}"))?;
        let v: usize = v.trim().parse().with_context(|| format!("bad endpoint in {piece:?}"))?;
        max_endpoint = max_endpoint.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() && n.is_none() {
        bail!("empty edge list needs an explicit --n");
    }
    let order = match n {
        Some(n) if n > max_endpoint || edges.is_empty() => n,
        Some(n) => bail!("--n {n} is too small for endpoint {max_endpoint}"),
        None => max_endpoint + 1,
    };
    Ok(Graph::from_edge_list(order, &edges)?)
}

/// Parses a family descriptor, e.g. `complete:7`, `star:6`, `bipartite:3,4`,
/// `multipartite:3,2,2`, `kn-e:6`, `path:8`, `cycle:5`, `turan:9,5`.
pub fn parse_family(text: &str) -> Result<FamilySpec> {
    let (kind, params) = text
        .split_once(':')
        .with_context(|| format!("family {text:?} is not of the form kind:params"))?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|p| p.trim().parse::<usize>().with_context(|| format!("bad parameter {p:?}")))
        .collect::<Result<_>>()?;
    let arity = |want: usize| -> Result<()> {
        if nums.len() != want {
            bail!("family {kind:?} takes {want} parameter(s), got {}", nums.len());
        }
        Ok(())
    };
    Ok(match kind.trim() {
        "complete" => {
            arity(1)?;
            FamilySpec::Complete(nums[0])
        }
        "star" => {
            arity(1)?;
            FamilySpec::Star(nums[0])
        }
        "bipartite" => {
            arity(2)?;
            FamilySpec::CompleteBipartite(nums[0], nums[1])
        }
        "multipartite" => FamilySpec::CompleteMultipartite(nums.clone()),
        "kn-e" => {
            arity(1)?;
            FamilySpec::KnMinusE(nums[0])
        }
        "path" => {
            arity(1)?;
            FamilySpec::Path(nums[0])
        }
        "cycle" => {
            arity(1)?;
            FamilySpec::Cycle(nums[0])
        }
        "turan" => {
            arity(2)?;
            FamilySpec::TuranType {
                n: nums[0],
                chi: nums[1],
            }
        }
        other => bail!(
            "unknown family {other:?}; expected one of complete, star, bipartite, \
             multipartite, kn-e, path, cycle, turan"
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_and_edge_list_agree() {
        let a = parse_graph("C~", false, None).unwrap();
        let b = parse_graph("0-1,0-2,0-3,1-2,1-3,2-3", true, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn edge_list_with_order() {
        let g = parse_graph("0-1,1-2", true, Some(3)).unwrap();
        assert_eq!(g.n(), 3);
        assert!(parse_graph("0-1,1-2", true, Some(2)).is_err());
        assert!(parse_graph("", true, None).is_err());
        assert_eq!(parse_graph("", true, Some(4)).unwrap().n(), 4);
    }

    #[test]
    fn families_parse() {
        assert_eq!(parse_family("complete:7").unwrap(), FamilySpec::Complete(7));
        assert_eq!(
            parse_family("bipartite:3,4").unwrap(),
            FamilySpec::CompleteBipartite(3, 4)
        );
        assert_eq!(
            parse_family("multipartite:3,2,2").unwrap(),
            FamilySpec::CompleteMultipartite(vec![3, 2, 2])
        );
        assert_eq!(
            parse_family("turan:9,5").unwrap(),
            FamilySpec::TuranType { n: 9, chi: 5 }
        );
        assert!(parse_family("moebius:5").is_err());
        assert!(parse_family("complete:3,4").is_err());
        assert!(parse_family("complete").is_err());
    }
}
