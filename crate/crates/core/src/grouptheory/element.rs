use std::fmt;

use crate::{Error, Result};

/// A permutation of `{0, .., m-1}` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::BadGenerator(format!("image {i} out of range")))?;
            if *slot {
                return Err(Error::BadGenerator(format!("image {i} repeated")));
            }
            *slot = true;
        }
        Ok(Perm(images))
    }

    /// Parses cycle notation on the points `1..=degree`, e.g. `(1,2,3)(4,5)`.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad cycle notation {s:?}"));
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let cycle = &body[..close];
            rest = &body[close + 1..];
            if cycle.is_empty() {
                continue;
            }
            let pts = cycle
                .split(',')
                .map(|p| p.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            for (i, &p) in pts.iter().enumerate() {
                let q = pts[(i + 1) % pts.len()];
                if p == 0 || p > degree || q == 0 || q > degree {
                    return Err(Error::BadGenerator(format!("point out of range in {s:?}")));
                }
                images[p - 1] = (q - 1) as u32;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn cycles(&self) -> String {
        let mut seen = vec![false; self.0.len()];
        let mut out = String::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut j = self.0[start] as usize;
            while j != start {
                seen[j] = true;
                cyc.push(j + 1);
                j = self.0[j] as usize;
            }
            let parts: Vec<String> = cyc.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("({})", parts.join(",")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Square integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmallMat {
    dim: usize,
    entries: Vec<i64>,
}

impl SmallMat {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        SmallMat { dim, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::BadGenerator("matrix is not square".into()));
        }
        Ok(SmallMat { dim, entries: rows.concat() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        SmallMat { dim: n, entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = a
                        .checked_mul(other.entries[k * n + j])
                        .and_then(|t| t.checked_add(entries[i * n + j]))
                        .expect("matrix group element overflowed i64");
                    entries[i * n + j] = t;
                }
            }
        }
        SmallMat { dim: n, entries }
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> i128 {
        let n = self.dim;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k * n + k] == 0 {
                let Some(p) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                    return 0;
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
                }
            }
            prev = a[k * n + k];
        }
        sign * a[n * n - 1]
    }
}

/// An element of a concrete permutation or integer matrix group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Perm(Perm),
    Matrix(SmallMat),
}

impl GroupElement {
    /// Composition `self * other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) if a.degree() == b.degree() => {
                Ok(GroupElement::Perm(Perm(b.0.iter().map(|&x| a.0[x as usize]).collect())))
            }
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) if a.dim == b.dim => {
                Ok(GroupElement::Matrix(a.mul(b)))
            }
            _ => Err(Error::BadGenerator("incompatible group elements".into())),
        }
    }

    pub fn identity_like(&self) -> Self {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(Perm::identity(p.degree())),
            GroupElement::Matrix(m) => GroupElement::Matrix(SmallMat::identity(m.dim)),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    /// Canonical byte encoding; lexicographic order on it is the canonical
    /// element order.
    pub fn encoding(&self) -> Vec<u8> {
        match self {
            GroupElement::Perm(p) => {
                let mut out = vec![0u8];
                for &i in &p.0 {
                    out.extend_from_slice(&i.to_be_bytes());
                }
                out
            }
            GroupElement::Matrix(m) => {
                let mut out = vec![1u8];
                out.extend_from_slice(&(m.dim as u32).to_be_bytes());
                for &x in &m.entries {
                    out.extend_from_slice(&((x as u64) ^ (1u64 << 63)).to_be_bytes());
                }
                out
            }
        }
    }

    pub fn as_matrix(&self) -> Option<&SmallMat> {
        match self {
            GroupElement::Matrix(m) => Some(m),
            GroupElement::Perm(_) => None,
        }
    }

    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            GroupElement::Perm(p) => Some(p),
            GroupElement::Matrix(_) => None,
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{}", p.cycles()),
            GroupElement::Matrix(m) => write!(f, "{:?}", m.rows()),
        }
    }
}
