//! Curve neighborhoods, the moment graph and its path-weight oracle, line
//! neighborhoods and cominuscule degree distances.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::degree::{maximal_roots, z_coset, z_of_degree, Degree};
use crate::error::{internal, usage, Result};
use crate::hecke::hecke_mul;
use crate::rootsys::{root_leq, Root};
use crate::weyl::{Coset, Parabolic, WeylElt};

/// Default cap on the number of cosets the oracle will explore.
pub const DEFAULT_ORACLE_CAP: u64 = 5_000;

/// `Γ_d(X(w)) = X(w · z_d^P)`, returned as the coset `(w · z_d^P) W_P`.
pub fn curve_neighborhood(p: &Parabolic, w: &WeylElt, d: &Degree) -> Result<Coset> {
    let u = p.min_rep(w);
    if !d.is_effective() {
        return Err(usage("degree is not effective"));
    }
    if d.is_zero() {
        return Ok(p.coset_of_min_rep(u));
    }
    let z = z_of_degree(p, d)?;
    Ok(p.coset(&hecke_mul(p.group(), &u, &z.z_times_wp)))
}

/// All cosets below `c` in the Bruhat order, in enumeration order.
pub fn bruhat_lower_set(p: &Parabolic, c: &Coset, cap: u64) -> Result<Vec<Coset>> {
    Ok(p.enumerate_cosets(cap)?
        .into_iter()
        .filter(|x| p.coset_leq(x, c))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    /// Root-table index of `α` with `target = source · s_α` as cosets.
    pub root: usize,
    pub degree: Degree,
}

/// The moment graph of `G/P`: vertices are the cosets `W/W_P`, one edge per
/// `T`-stable curve.
#[derive(Clone, Debug)]
pub struct MomentGraph {
    parabolic: Parabolic,
    vertices: Vec<WeylElt>,
    index: HashMap<WeylElt, usize>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl MomentGraph {
    pub fn build(p: &Parabolic, cap: u64) -> Result<Self> {
        let vertices = p.enumerate_min_reps(cap)?;
        let index: HashMap<WeylElt, usize> = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let g = p.group();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (a, u) in vertices.iter().enumerate() {
            for alpha in p.outside_roots() {
                let v = p.min_rep(&g.multiply(u, &g.reflection(alpha)));
                let b = *index
                    .get(&v)
                    .ok_or_else(|| internal("moment graph neighbour is not a vertex"))?;
                // Each curve is seen from both ends; keep the smaller end's label.
                if b <= a {
                    continue;
                }
                adjacency[a].push(edges.len());
                adjacency[b].push(edges.len());
                edges.push(Edge {
                    source: a,
                    target: b,
                    root: alpha.index,
                    degree: Degree::of_root(p, alpha),
                });
            }
        }
        Ok(MomentGraph {
            parabolic: p.clone(),
            vertices,
            index,
            edges,
            adjacency,
        })
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn vertices(&self) -> &[WeylElt] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_of(&self, w: &WeylElt) -> usize {
        self.index[&self.parabolic.min_rep(w)]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, &Edge)> + '_ {
        self.adjacency[v].iter().map(move |&e| {
            let edge = &self.edges[e];
            let other = if edge.source == v {
                edge.target
            } else {
                edge.source
            };
            (other, edge)
        })
    }

    /// Minimal path weights from the seed vertices, truncated at `bound`.
    pub fn pareto_weights(&self, seeds: &[usize], bound: &Degree) -> Vec<Vec<Vec<i32>>> {
        let zero = vec![0; bound.coords().len()];
        let mut sets: Vec<Vec<Vec<i32>>> = vec![Vec::new(); self.vertices.len()];
        let mut queue = VecDeque::new();
        for &s in seeds {
            if sets[s].is_empty() {
                sets[s].push(zero.clone());
                queue.push_back((s, zero.clone()));
            }
        }
        while let Some((v, w)) = queue.pop_front() {
            // Skip weights pruned after they were queued.
            if !sets[v].contains(&w) {
                continue;
            }
            for (u, edge) in self.neighbours(v) {
                let cand: Vec<i32> = w
                    .iter()
                    .zip(edge.degree.coords())
                    .map(|(a, b)| a + b)
                    .collect();
                if !root_leq(&cand, bound.coords()) {
                    continue;
                }
                if sets[u].iter().any(|x| root_leq(x, &cand)) {
                    continue;
                }
                sets[u].retain(|x| !root_leq(&cand, x));
                sets[u].push(cand.clone());
                queue.push_back((u, cand));
            }
        }
        for s in &mut sets {
            s.sort();
        }
        sets
    }

    /// Vertices joined to some seed by a path of weight `≤ d`.
    pub fn reachable(&self, seeds: &[usize], d: &Degree) -> Vec<usize> {
        self.pareto_weights(seeds, d)
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_empty())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn vertex_label(&self, v: usize) -> String {
        self.parabolic.group().format(&self.vertices[v])
    }

    pub fn to_dot(&self) -> String {
        let rs = self.parabolic.roots();
        let mut out = String::from("graph moment {\n");
        for v in 0..self.vertices.len() {
            let _ = writeln!(out, "  v{v} [label=\"{}\"];", self.vertex_label(v));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  v{} -- v{} [label=\"{} {}\"];",
                e.source,
                e.target,
                e.degree,
                rs.format_root(rs.root(e.root))
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> MomentGraphJson {
        let rs = self.parabolic.roots();
        MomentGraphJson {
            cartan_type: rs.label(),
            parabolic: self.parabolic.subset().iter().map(|i| i + 1).collect(),
            vertices: (0..self.vertices.len())
                .map(|id| VertexJson {
                    id,
                    word: self.vertex_label(id),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    source: e.source,
                    target: e.target,
                    degree: e.degree.to_string(),
                    root: rs.root(e.root).coords.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentGraphJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub parabolic: Vec<usize>,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub source: usize,
    pub target: usize,
    pub degree: String,
    pub root: Vec<i32>,
}

/// Brute-force `Γ_d(X(w))`: every coset reachable from a fixed point of
/// `X(w)` along a path of weight `≤ d`, in vertex order.
pub fn neighborhood_oracle(graph: &MomentGraph, w: &WeylElt, d: &Degree) -> Result<Vec<Coset>> {
    let p = graph.parabolic();
    if !d.is_effective() {
        return Err(usage("degree is not effective"));
    }
    let top = p.min_rep(w);
    let g = p.group();
    let seeds: Vec<usize> = (0..graph.vertices.len())
        .filter(|&i| g.bruhat_leq(&graph.vertices[i], &top))
        .collect();
    Ok(graph
        .reachable(&seeds, d)
        .into_iter()
        .map(|i| p.coset_of_min_rep(graph.vertices[i].clone()))
        .collect())
}

/// `w_P(γ)`, the largest root in `γ + ZΔ_P`.
pub fn wp_max_root(p: &Parabolic, gamma: usize) -> Result<&Root> {
    if gamma >= p.rank() || p.contains_simple(gamma) {
        return Err(usage(format!("β{} is not in Δ ∖ Δ_P", gamma + 1)));
    }
    let rs = p.roots();
    let img = p.w_p().act(&rs.simple(gamma).coords);
    let rho = rs
        .find(&img)
        .map(|i| rs.root(i))
        .ok_or_else(|| internal("w_P(γ) is not a positive root"))?;
    let in_class = |r: &&Root| {
        p.complement()
            .iter()
            .all(|&j| r.coords[j] == i32::from(j == gamma))
    };
    if !rs
        .positive_roots()
        .iter()
        .filter(in_class)
        .all(|r| root_leq(&r.coords, &rho.coords))
    {
        return Err(internal("w_P(γ) does not dominate γ + ZΔ_P"));
    }
    Ok(rho)
}

/// `γ` is at least as long as every root of its component in `Δ_P ∪ {γ}`.
pub fn is_fano_root(p: &Parabolic, gamma: usize) -> Result<bool> {
    if gamma >= p.rank() || p.contains_simple(gamma) {
        return Err(usage(format!("β{} is not in Δ ∖ Δ_P", gamma + 1)));
    }
    let mut nodes = p.subset().to_vec();
    nodes.push(gamma);
    let comp = p.roots().component(&nodes, gamma);
    let d = p.roots().datum().symmetrizers();
    Ok(comp.iter().all(|&j| d[j] <= d[gamma]))
}

/// `z^P_{γ^∨} W_P = w_P s_γ W_P` for a Fano root `γ`.
pub fn line_neighborhood(p: &Parabolic, gamma: usize) -> Result<Coset> {
    if !is_fano_root(p, gamma)? {
        return Err(usage(format!("β{} is not a Fano root", gamma + 1)));
    }
    let g = p.group();
    let coset = p.coset(&g.right_mul_simple(p.w_p(), gamma));
    let rho = wp_max_root(p, gamma)?;
    let d = Degree::of_root(p, p.roots().simple(gamma));
    let maxima = maximal_roots(p, &d)?;
    if maxima.len() != 1 || maxima[0].index != rho.index {
        return Err(internal("w_P(γ) is not the unique maximal root of γ^∨"));
    }
    if z_coset(p, &d)? != coset {
        return Err(internal("line neighborhood disagrees with z^P_{γ^∨}"));
    }
    Ok(coset)
}

/// The cominuscule root `γ` when `Δ_P = Δ ∖ {γ}` and `γ` has coefficient
/// one in the highest root.
pub fn is_cominuscule(p: &Parabolic) -> Option<usize> {
    match p.complement() {
        [gamma] if p.roots().highest_root().coords[*gamma] == 1 => Some(*gamma),
        _ => None,
    }
}

fn require_cominuscule(p: &Parabolic) -> Result<usize> {
    is_cominuscule(p).ok_or_else(|| usage("G/P is not cominuscule"))
}

/// Smallest degree of a curve from `1.P` to `u.P`: the number of `s_γ`
/// letters in a reduced word of the minimal representative.
pub fn degree_distance(p: &Parabolic, u: &WeylElt) -> Result<usize> {
    let gamma = require_cominuscule(p)?;
    let g = p.group();
    Ok(g.word(&p.min_rep(u))
        .iter()
        .filter(|&&i| i == gamma)
        .count())
}

/// `(w_P s_γ) · … · (w_P s_γ) W_P` with `d` factors.
pub fn cominuscule_z(p: &Parabolic, d: &Degree) -> Result<Coset> {
    let gamma = require_cominuscule(p)?;
    if !d.is_effective() {
        return Err(usage("degree is not effective"));
    }
    let g = p.group();
    let x = g.right_mul_simple(p.w_p(), gamma);
    let mut acc = g.identity();
    for _ in 0..d.coords()[0] {
        acc = hecke_mul(g, &acc, &x);
    }
    let coset = p.coset(&acc);
    if coset != z_coset(p, d)? {
        return Err(internal(format!(
            "cominuscule z disagrees with z_d^P at d = {d}"
        )));
    }
    Ok(coset)
}
