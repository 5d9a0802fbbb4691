//! Higher and mixed Hessians, and the CIJT ↔ nonvanishing-subset dictionary.
//!
//! Mixed orders are written `(u, s)`: source degree u, target degree s, for
//! the map `m_{ℓ^{s−u}}: A_u → A_s`. The matrix with rows indexed by a basis
//! of `A_k` and columns by a basis of `A_l` has order `(k, j − l)`. The pure
//! Hessian of order i is `(i, j − i)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{annihilator, quotient, ArtinAlgebra};
use crate::codes::{cijt_from_composition, is_cijt};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{ci_hilbert_of, HilbertFunction, Partition};
use crate::poly::{BivariatePoly, Q};

/// Indices i with `h^i_ℓ ≠ 0`.
pub type HessianSubset = BTreeSet<usize>;

pub fn active_hessian_indices(t: &HilbertFunction) -> Vec<usize> {
    let top = if t.k() >= 2 { t.d() } else { t.d() - 1 };
    (0..top).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessianMatrix {
    pub u: usize,
    pub s: usize,
    /// Entries are forms in the dual variables X, Y.
    pub entries: Vec<Vec<BivariatePoly>>,
}

impl HessianMatrix {
    pub fn evaluate(&self, a: &Q, b: &Q) -> Vec<Vec<Q>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval(a, b)).collect())
            .collect()
    }

    /// Rank at the point `(a, b)` attached to `ℓ = a x + b y`.
    pub fn rank_at(&self, a: &Q, b: &Q) -> usize {
        linalg::rank(&self.evaluate(a, b))
    }

    /// Symbolic determinant by cofactor expansion; only meant for small orders.
    pub fn determinant(&self) -> Option<BivariatePoly> {
        let n = self.entries.len();
        if n == 0 || self.entries.iter().any(|r| r.len() != n) || n > 4 {
            return None;
        }
        Some(det(&self.entries))
    }
}

fn det(m: &[Vec<BivariatePoly>]) -> BivariatePoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BivariatePoly::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BivariatePoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * &det(&minor);
        acc = if c % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Contraction matrix against bases of `A_u` (rows) and `A_{j−s}` (columns).
pub fn mixed_hessian_matrix(
    f: &BivariatePoly,
    alg: &ArtinAlgebra,
    u: usize,
    s: usize,
) -> Result<HessianMatrix> {
    let j = f.degree().ok_or(Error::ZeroInput)? as usize;
    if u > s || s > j {
        return Err(Error::DegreeOutOfRange(format!(
            "order ({u},{s}) with socle degree {j}"
        )));
    }
    let rows = alg.basis(u as u32);
    let cols = alg.basis((j - s) as u32);
    let entries = rows
        .iter()
        .map(|r| cols.iter().map(|c| (r * c).contract(f)).collect())
        .collect();
    Ok(HessianMatrix { u, s, entries })
}

/// `Hess^i(F)`, over the standard monomials of `A_i` for `A = R/Ann F`.
pub fn hessian_matrix(f: &BivariatePoly, i: usize) -> Result<HessianMatrix> {
    let alg = quotient(&annihilator(f)?)?;
    hessian_matrix_in(f, &alg, i)
}

pub fn hessian_matrix_in(f: &BivariatePoly, alg: &ArtinAlgebra, i: usize) -> Result<HessianMatrix> {
    let j = f.degree().ok_or(Error::ZeroInput)? as usize;
    if 2 * i > j {
        return Err(Error::OrderOutOfRange(i));
    }
    mixed_hessian_matrix(f, alg, i, j - i)
}

/// `{i active : rank(m_{ℓ^{j−2i}}: A_i → A_{j−i}) = i + 1}`.
pub fn nonvanishing_set(alg: &ArtinAlgebra, ell: &BivariatePoly) -> Result<HessianSubset> {
    let t = HilbertFunction::new(alg.hilbert())?;
    let j = t.j();
    let mut out = HessianSubset::new();
    for i in active_hessian_indices(&t) {
        if alg.rank_mult_power(ell, i as u32, (j - i) as u32)? == i + 1 {
            out.insert(i);
        }
    }
    Ok(out)
}

fn require_cijt(p: &Partition) -> Result<HilbertFunction> {
    let t = ci_hilbert_of(p)?;
    if !is_cijt(p)? {
        return Err(Error::NotCijt(p.to_string()));
    }
    Ok(t)
}

/// `{i active : p_1 + … + p_{i+1} = (i+1)(j+1−i)}`.
pub fn predicted_nonvanishing_set(p: &Partition) -> Result<HessianSubset> {
    let t = require_cijt(p)?;
    let j = t.j();
    let mut out = HessianSubset::new();
    for i in active_hessian_indices(&t) {
        let partial: usize = p.parts().iter().take(i + 1).sum();
        if partial == (i + 1) * (j + 1 - i) {
            out.insert(i);
        }
    }
    Ok(out)
}

pub fn cijt_from_hessian_subset(t: &HilbertFunction, s: &HessianSubset) -> Result<Partition> {
    let active = active_hessian_indices(t);
    if s.iter().any(|i| !active.contains(i)) {
        return Err(Error::InvalidSubset(s.iter().copied().collect()));
    }
    let mut comp = Vec::new();
    let mut prev: i64 = -1;
    for &i in s {
        comp.push((i as i64 - prev) as usize);
        prev = i as i64;
    }
    cijt_from_composition(t, &comp)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
    pub ranks: BTreeMap<(usize, usize), usize>,
}

impl RankProfile {
    fn set(&mut self, key: (usize, usize), r: usize) -> Result<()> {
        if let Some(&old) = self.ranks.get(&key) {
            if old != r {
                return Err(Error::InternalInconsistency(format!(
                    "rank formulas disagree at {key:?}: {old} vs {r}"
                )));
            }
        }
        self.ranks.insert(key, r);
        Ok(())
    }

    /// Pure ranks `rk Hess^i` for the given orders.
    pub fn pure(&self, j: usize, orders: &[usize]) -> Vec<Option<usize>> {
        orders
            .iter()
            .map(|&i| self.ranks.get(&(i, j - i)).copied())
            .collect()
    }
}

/// Ranks predicted from the vanishing runs of the active Hessians.
pub fn predicted_rank_profile(p: &Partition) -> Result<RankProfile> {
    let t = require_cijt(p)?;
    let (d, k, j) = (t.d(), t.k(), t.j());
    let active = active_hessian_indices(&t);
    let nonvanishing = predicted_nonvanishing_set(p)?;
    let mut prof = RankProfile::default();
    for &i in &nonvanishing {
        prof.set((i, j - i), i + 1)?;
    }
    let vanishing: Vec<usize> = active
        .iter()
        .copied()
        .filter(|i| !nonvanishing.contains(i))
        .collect();
    for (m, n) in runs(&vanishing) {
        if m + n + 2 <= d {
            // a run ending at or below d − 2
            for i in 0..=n {
                for s in j - (m + n)..=j - (m + i) {
                    prof.set((m + i, s), (j + i).saturating_sub(n + s).max(m))?;
                }
                if j > m + n {
                    for s in d..=j - (m + n + 1) {
                        if s >= m + i {
                            prof.set((m + i, s), m + i + 1)?;
                        }
                    }
                }
            }
        } else if k >= 2 && m + n == d - 1 {
            for i in 0..n + k / 2 {
                for s in d..=j - (m + i) {
                    if s >= m + i {
                        prof.set((m + i, s), (2 * m + n + i + 1).saturating_sub(s).max(m))?;
                    }
                }
            }
        }
    }
    Ok(prof)
}

/// Maximal runs of consecutive integers as `(start, length − 1)`.
fn runs(v: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in v {
        match out.last_mut() {
            Some((m, n)) if *m + *n + 1 == x => *n += 1,
            _ => out.push((x, 0)),
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GenericWhich {
    /// A simple root of `h^i` for `i ≤ d − 2`.
    Order(usize),
    /// A root of `h^{d−1}` (needs k ≥ 2).
    Top,
    /// A general linear form.
    StrongLefschetz,
}

pub fn generic_jordan_type(t: &HilbertFunction, which: GenericWhich) -> Result<Partition> {
    let (d, k, j) = (t.d() as i64, t.k() as i64, t.j() as i64);
    match which {
        GenericWhich::StrongLefschetz => Ok(t.sl_partition()),
        GenericWhich::Top => {
            if k < 2 {
                return Err(Error::TopRequiresKGe2);
            }
            let mut parts: Vec<usize> = (0..d - 1).map(|m| (j + 1 - 2 * m) as usize).collect();
            parts.extend(std::iter::repeat_n(1, k as usize));
            Partition::new(parts)
        }
        GenericWhich::Order(i) => {
            let i = i as i64;
            if i > d - 2 {
                return Err(Error::OrderOutOfRange(i as usize));
            }
            let c = j - 2 * i;
            // …, c+5, c+3, c, c, c−3, c−5, …
            let mut seq: Vec<i64> = (0..=j).rev().map(|m| c + 3 + 2 * m).collect();
            seq.push(c);
            seq.push(c);
            seq.extend((0..=j).map(|m| c - 3 - 2 * m));
            let window: Vec<usize> = seq
                .into_iter()
                .filter(|&v| v >= k && v <= j + 1)
                .map(|v| v as usize)
                .collect();
            if window.len() != d as usize {
                return Err(Error::InternalInconsistency(format!(
                    "generic type for h^{i} has {} entries in range, expected {d}",
                    window.len()
                )));
            }
            Partition::new(window)
        }
    }
}

/// Rank of the symbolic Hessian of order `i` at `(a, b)` for every active i.
pub fn symbolic_ranks_at(
    f: &BivariatePoly,
    alg: &ArtinAlgebra,
    a: &Q,
    b: &Q,
) -> Result<Vec<(usize, usize)>> {
    let t = HilbertFunction::new(alg.hilbert())?;
    active_hessian_indices(&t)
        .into_iter()
        .map(|i| Ok((i, hessian_matrix_in(f, alg, i)?.rank_at(a, b))))
        .collect()
}
