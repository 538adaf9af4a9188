//! Cartan data for the finite crystallographic types, Bourbaki numbering.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest rank accepted by [`CartanType::new`].
pub const MAX_RANK: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A finite type such as `B3` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::Config(format!(
                "no finite root system of type {}{}",
                family.letter(),
                rank
            )));
        }
        if rank > MAX_RANK {
            return Err(Error::Config(format!(
                "rank {rank} exceeds the supported maximum of {MAX_RANK}"
            )));
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::Config(format!("unrecognized type label '{s}'"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Config(format!("unrecognized type label '{s}'")))?;
        CartanType::new(family, rank)
    }
}

/// Cartan matrix with `matrix[i][j] = <β_i, β_j^∨>` plus symmetrizers.
///
/// The symmetrizer `d_i` is half the squared length of `β_i`, scaled so the
/// shortest simple root has `d = 1`; `(β_i, β_j) = matrix[i][j] * d_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    cartan_type: CartanType,
    dual: bool,
    matrix: Vec<Vec<i32>>,
    symmetrizers: Vec<i32>,
}

impl CartanDatum {
    pub fn new(cartan_type: CartanType) -> Self {
        let matrix = bourbaki_matrix(cartan_type);
        let symmetrizers = symmetrize(&matrix);
        CartanDatum {
            cartan_type,
            dual: false,
            matrix,
            symmetrizers,
        }
    }

    /// The datum of the dual root system (transposed matrix).
    pub fn dual(&self) -> Self {
        let n = self.rank();
        let matrix: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| self.matrix[j][i]).collect())
            .collect();
        let symmetrizers = symmetrize(&matrix);
        CartanDatum {
            cartan_type: self.cartan_type,
            dual: !self.dual,
            matrix,
            symmetrizers,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.matrix[i][j]
    }

    pub fn symmetrizers(&self) -> &[i32] {
        &self.symmetrizers
    }

    /// `(β_i, β_j)` in the normalization where short roots have `(β, β) = 2`.
    pub fn form(&self, i: usize, j: usize) -> i32 {
        self.matrix[i][j] * self.symmetrizers[j]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.matrix[i][j] != 0
    }

    pub fn label(&self) -> String {
        if self.dual {
            format!("{}^dual", self.cartan_type)
        } else {
            self.cartan_type.to_string()
        }
    }
}

fn bourbaki_matrix(t: CartanType) -> Vec<Vec<i32>> {
    let n = t.rank;
    let mut m = vec![vec![0i32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    // m[i][j] = <β_i, β_j^∨>; a long β_i against a short β_j gives the -2 or -3.
    let mut link = |i: usize, j: usize, cij: i32, cji: i32| {
        m[i][j] = cij;
        m[j][i] = cji;
    };
    match t.family {
        Family::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B | Family::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            if t.family == Family::B {
                link(n - 2, n - 1, -2, -1);
            } else {
                link(n - 2, n - 1, -1, -2);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -1, -3),
    }
    m
}

/// Solves `m[i][j] d_j = m[j][i] d_i` along the (connected) Dynkin diagram.
fn symmetrize(m: &[Vec<i32>]) -> Vec<i32> {
    let n = m.len();
    // 6 is divisible by every ratio that occurs (1, 2, 3).
    let mut d = vec![0i32; n];
    d[0] = 6;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && m[i][j] != 0 && d[j] == 0 {
                d[j] = d[i] * m[j][i] / m[i][j];
                stack.push(j);
            }
        }
    }
    let g = d.iter().copied().fold(0, gcd);
    d.iter().map(|x| x / g).collect()
}

fn gcd(a: i32, b: i32) -> i32 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}
