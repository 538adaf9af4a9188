//! Finite root systems in simple-root and simple-coroot coordinates.
//!
//! Every root is stored twice: as an integer vector over the simple roots and
//! its coroot as an integer vector over the simple coroots. No ambient
//! Euclidean model is used; see [`classical`] for the `e_i` coordinates of the
//! classical types.

pub mod cartan;
pub mod classical;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

pub use cartan::{CartanDatum, CartanType, Family};

use crate::error::{internal, Result};

/// A positive root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub coords: Vec<i32>,
    /// Coefficients of the coroot over the simple coroots.
    pub coroot: Vec<i32>,
    /// Position in [`RootSystem::positive_roots`].
    pub index: usize,
    pub is_positive: bool,
    /// In simply-laced systems every root is long.
    pub is_long: bool,
}

impl Root {
    pub fn height(&self) -> i32 {
        height(&self.coords)
    }

    pub fn coroot_height(&self) -> i32 {
        height(&self.coroot)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        support(&self.coords)
    }
}

#[derive(Debug)]
pub struct RootSystem {
    datum: CartanDatum,
    positive: Vec<Root>,
    lookup: HashMap<Vec<i32>, usize>,
    coroot_lookup: HashMap<Vec<i32>, usize>,
    highest: usize,
}

impl RootSystem {
    /// Builds the root system of a finite type, e.g. `("B", 2)` as `"B2"`.
    pub fn build(cartan_type: CartanType) -> Result<Arc<Self>> {
        Self::from_datum(CartanDatum::new(cartan_type))
    }

    pub fn from_label(label: &str) -> Result<Arc<Self>> {
        Self::build(label.parse()?)
    }

    /// The dual system `R^∨`, whose simple roots are the simple coroots.
    pub fn dual(&self) -> Result<Arc<Self>> {
        Self::from_datum(self.datum.dual())
    }

    pub fn from_datum(datum: CartanDatum) -> Result<Arc<Self>> {
        let n = datum.rank();
        // Close the simple roots under simple reflections, staying positive.
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut found = Vec::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let v = unit(n, i);
            seen.insert(v.clone());
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                if is_unit(&v, i) {
                    continue;
                }
                let p: i32 = (0..n).map(|k| v[k] * datum.entry(k, i)).sum();
                if p == 0 {
                    continue;
                }
                let mut w = v.clone();
                w[i] -= p;
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
            found.push(v);
        }
        found.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));

        let dmax = *datum.symmetrizers().iter().max().expect("rank >= 1");
        let mut positive = Vec::with_capacity(found.len());
        for (index, coords) in found.into_iter().enumerate() {
            if coords.iter().any(|&c| c < 0) {
                return Err(internal(format!("non-positive root {coords:?} generated")));
            }
            let norm: i32 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| coords[i] * coords[j] * datum.form(i, j))
                .sum();
            // norm = (α, α) = 2 d_α
            let d_alpha = norm / 2;
            let mut coroot = Vec::with_capacity(n);
            for i in 0..n {
                let num = coords[i] * datum.symmetrizers()[i];
                if num % d_alpha != 0 {
                    return Err(internal(format!("coroot of {coords:?} is not integral")));
                }
                coroot.push(num / d_alpha);
            }
            positive.push(Root {
                coords,
                coroot,
                index,
                is_positive: true,
                is_long: d_alpha == dmax,
            });
        }
        let lookup = positive
            .iter()
            .map(|r| (r.coords.clone(), r.index))
            .collect();
        let coroot_lookup = positive
            .iter()
            .map(|r| (r.coroot.clone(), r.index))
            .collect();
        let highest = positive.len() - 1;
        let rs = RootSystem {
            datum,
            positive,
            lookup,
            coroot_lookup,
            highest,
        };
        if !rs
            .positive
            .iter()
            .all(|r| root_leq(&r.coords, &rs.positive[highest].coords))
        {
            return Err(internal("root table has no unique maximum"));
        }
        Ok(Arc::new(rs))
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn cartan_type(&self) -> CartanType {
        self.datum.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn label(&self) -> String {
        self.datum.label()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.positive[index]
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive[self.highest]
    }

    /// Index of the simple root `β_i` (0-based `i`).
    pub fn simple(&self, i: usize) -> &Root {
        &self.positive[self.lookup[&unit(self.rank(), i)]]
    }

    /// Index of the positive root with the given simple-root coordinates.
    pub fn find(&self, coords: &[i32]) -> Option<usize> {
        self.lookup.get(coords).copied()
    }

    /// Index of the positive root whose coroot has the given coordinates.
    pub fn find_by_coroot(&self, coroot: &[i32]) -> Option<usize> {
        self.coroot_lookup.get(coroot).copied()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.positive.iter().all(|r| r.is_long)
    }

    /// `<α, β^∨>` for `α` over simple roots and `β^∨` over simple coroots.
    pub fn pair(&self, root_vec: &[i32], coroot_vec: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if root_vec[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += root_vec[i] * coroot_vec[j] * self.datum.entry(i, j);
            }
        }
        s
    }

    /// `<v, β_i^∨>`.
    #[inline]
    pub fn pair_simple(&self, root_vec: &[i32], i: usize) -> i32 {
        (0..self.rank())
            .map(|k| root_vec[k] * self.datum.entry(k, i))
            .sum()
    }

    /// The invariant form `(v, u)` on root-lattice vectors.
    pub fn form(&self, a: &[i32], b: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a[i] * b[j] * self.datum.form(i, j);
            }
        }
        s
    }

    /// True iff `supp(α) ∪ supp(β)` is disconnected in the Dynkin diagram.
    pub fn are_separated(&self, alpha: &Root, beta: &Root) -> bool {
        let nodes: Vec<usize> = (0..self.rank())
            .filter(|&i| alpha.coords[i] != 0 || beta.coords[i] != 0)
            .collect();
        !self.is_connected(&nodes)
    }

    /// Whether the given simple indices span a connected Dynkin subdiagram.
    pub fn is_connected(&self, nodes: &[usize]) -> bool {
        if nodes.is_empty() {
            return true;
        }
        let mut reached = vec![false; nodes.len()];
        reached[0] = true;
        let mut stack = vec![0usize];
        while let Some(a) = stack.pop() {
            for b in 0..nodes.len() {
                if !reached[b] && self.datum.adjacent(nodes[a], nodes[b]) {
                    reached[b] = true;
                    stack.push(b);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    /// Connected component of `start` inside the subdiagram on `nodes`.
    pub fn component(&self, nodes: &[usize], start: usize) -> Vec<usize> {
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for &b in nodes {
                if !comp.contains(&b) && self.datum.adjacent(a, b) {
                    comp.push(b);
                    stack.push(b);
                }
            }
        }
        comp.sort_unstable();
        comp
    }

    /// Human-readable form such as `β1+2β2`.
    pub fn format_root(&self, root: &Root) -> String {
        format_combination(&root.coords, "β")
    }

    pub fn format_coroot(&self, root: &Root) -> String {
        format_combination(&root.coroot, "β∨")
    }
}

/// `a ≤ b` in the root (or coroot) partial order: `b - a` is non-negative.
pub fn root_leq(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Componentwise maximum: the least upper bound in the lattice order.
pub fn join(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn height(v: &[i32]) -> i32 {
    v.iter().sum()
}

pub fn support(v: &[i32]) -> impl Iterator<Item = usize> + '_ {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i)
}

fn unit(n: usize, i: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn is_unit(v: &[i32], i: usize) -> bool {
    v.iter()
        .enumerate()
        .all(|(k, &c)| if k == i { c == 1 } else { c == 0 })
}

/// Formats `Σ c_i x_i` with 1-based subscripts, e.g. `3β1+2β2`.
pub fn format_combination(coords: &[i32], symbol: &str) -> String {
    let mut out = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            let _ = write!(out, "{}", c.abs());
        }
        let _ = write!(out, "{symbol}{}", i + 1);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
