//! Named graph families, the closed-form complete-multipartite spectrum and
//! purely combinatorial structure classification.
//!
//! Classification never looks at spectra: a graph is complete multipartite
//! exactly when every connected component of its complement is a clique, and
//! the recovered parts are the complement component sizes. Keeping this
//! combinatorial means the equality-characterization audits do not depend on
//! spectral tolerances.

use crate::eigen::Spectrum;
use crate::graph::{Graph, GraphError, MAX_VERTICES};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The families named by the bound characterizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    /// Part sizes; canonicalized non-increasing on input.
    CompleteMultipartite(Vec<usize>),
    /// `K_n - e`, i.e. `K_{n-2} v complement(K_2)`.
    KnMinusE(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{2,...,2,1,...,1}` with `n - chi` parts of size 2 and `2 chi - n`
    /// singletons; requires `n/2 <= chi <= n - 1`.
    TuranType { n: usize, chi: usize },
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParams(msg.into())
}

/// Canonical labeled representative of the family. Complete multipartite
/// graphs assign vertices to parts in order, largest part first.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::Complete(n) => {
            if *n < 1 {
                return Err(invalid("complete graph needs n >= 1"));
            }
            multipartite(&vec![1; *n])
        }
        FamilySpec::Star(n) => {
            if *n < 2 {
                return Err(invalid("star needs n >= 2"));
            }
            multipartite(&[*n - 1, 1])
        }
        FamilySpec::CompleteBipartite(a, b) => {
            if *a < 1 || *b < 1 {
                return Err(invalid("complete bipartite needs both parts >= 1"));
            }
            multipartite(&[*a, *b])
        }
        FamilySpec::CompleteMultipartite(parts) => multipartite(parts),
        FamilySpec::KnMinusE(n) => {
            if *n < 3 {
                return Err(invalid("K_n - e needs n >= 3 to stay connected"));
            }
            let mut parts = vec![1; *n - 1];
            parts[0] = 2;
            multipartite(&parts)
        }
        FamilySpec::Path(n) => {
            if *n < 1 {
                return Err(invalid("path needs n >= 1"));
            }
            let edges: Vec<_> = (0..*n - 1).map(|i| (i, i + 1)).collect();
            Ok(Graph::from_edge_list(*n, &edges)?)
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(invalid("cycle needs n >= 3"));
            }
            let mut edges: Vec<_> = (0..*n - 1).map(|i| (i, i + 1)).collect();
            edges.push((*n - 1, 0));
            Ok(Graph::from_edge_list(*n, &edges)?)
        }
        FamilySpec::TuranType { n, chi } => {
            let (n, chi) = (*n, *chi);
            if 2 * chi < n || chi > n.saturating_sub(1) {
                return Err(invalid(format!(
                    "Turan-type graph needs n/2 <= chi <= n-1, got n={n}, chi={chi}"
                )));
            }
            let mut parts = vec![2; n - chi];
            parts.extend(std::iter::repeat(1).take(2 * chi - n));
            multipartite(&parts)
        }
    }
}

fn multipartite(parts: &[usize]) -> Result<Graph, FamilyError> {
    let parts = canonical_parts(parts)?;
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    // vertex -> part index, parts laid out consecutively
    let mut part_of = Vec::with_capacity(n);
    for (idx, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(idx).take(size));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    Ok(g)
}

fn canonical_parts(parts: &[usize]) -> Result<Vec<usize>, FamilyError> {
    if parts.is_empty() {
        return Err(invalid("parts vector is empty"));
    }
    if parts.iter().any(|&p| p == 0) {
        return Err(invalid("every part must have size >= 1"));
    }
    let n: usize = parts.iter().sum();
    if n > MAX_VERTICES {
        return Err(invalid(format!("total order {n} exceeds cap {MAX_VERTICES}")));
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sorted)
}

/// Exact integer distance Laplacian spectrum of `K_{t_1,...,t_k}`:
/// each part of size `t_i >= 2` contributes `n + t_i` with multiplicity
/// `t_i - 1`, then `n` with multiplicity `k - 1`, then `0`.
pub fn multipartite_closed_form_spectrum(parts: &[usize]) -> Result<Spectrum, FamilyError> {
    let parts = canonical_parts(parts)?;
    if parts.len() < 2 {
        return Err(invalid("complete multipartite graph needs k >= 2 to be connected"));
    }
    let n: usize = parts.iter().sum();
    let k = parts.len();
    let mut values = Vec::with_capacity(n);
    for &t in &parts {
        for _ in 0..t.saturating_sub(1) {
            values.push((n + t) as f64);
        }
    }
    values.extend(std::iter::repeat(n as f64).take(k - 1));
    values.push(0.0);
    values.sort_by(|a, b| b.partial_cmp(a).unwrap());
    debug_assert_eq!(values.len(), n);
    Ok(Spectrum { values })
}

/// Combinatorial structure flags used by the equality characterizations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureTag {
    pub is_complete: bool,
    pub is_star: bool,
    /// Recovered part sizes (non-increasing) when the graph is complete
    /// multipartite, i.e. every complement component is a clique.
    pub multipartite_parts: Option<Vec<usize>>,
    /// Complete multipartite with all parts equal (includes `K_n`).
    pub is_balanced_multipartite: bool,
    /// Complete multipartite with parts of sizes 2 and 1 only, at least one 2.
    /// Carries the chromatic number `chi = k` of the graph.
    pub turan_chi: Option<usize>,
    pub is_k_pp: bool,
    pub is_kn_minus_e: bool,
}

impl StructureTag {
    pub fn is_complete_multipartite(&self) -> bool {
        self.multipartite_parts.is_some()
    }

    pub fn is_turan_type(&self) -> bool {
        self.turan_chi.is_some()
    }
}

/// Decides all flags exactly, without spectra.
pub fn classify_structure(g: &Graph) -> StructureTag {
    let n = g.n();
    let comp = g.complement();
    let (count, labels) = comp.connected_components();

    let mut parts: Option<Vec<usize>> = None;
    if n > 0 {
        let mut sizes = vec![0usize; count];
        for &l in &labels {
            sizes[l] += 1;
        }
        // complete multipartite <=> each complement component is a clique
        let mut all_cliques = true;
        'outer: for c in 0..count {
            let members: Vec<usize> = (0..n).filter(|&v| labels[v] == c).collect();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if !comp.has_edge(u, v) {
                        all_cliques = false;
                        break 'outer;
                    }
                }
            }
        }
        if all_cliques {
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            parts = Some(sizes);
        }
    }

    let is_complete = n > 0 && g.edge_count() == n * (n - 1) / 2;
    let is_star = matches!(&parts, Some(p) if p.len() == 2 && p[1] == 1 && n >= 2);
    let is_balanced = matches!(&parts, Some(p) if p.len() >= 2 && p.iter().all(|&x| x == p[0]));
    let turan_chi = match &parts {
        Some(p) if p[0] == 2 && p.iter().all(|&x| x <= 2) => Some(p.len()),
        _ => None,
    };
    let is_k_pp = matches!(&parts, Some(p) if p.len() == 2 && p[0] == p[1]);
    let is_kn_minus_e =
        matches!(&parts, Some(p) if p.len() == n - 1 && p[0] == 2 && p.iter().skip(1).all(|&x| x == 1));

    StructureTag {
        is_complete,
        is_star,
        multipartite_parts: parts,
        is_balanced_multipartite: is_balanced,
        turan_chi,
        is_k_pp,
        is_kn_minus_e,
    }
}
