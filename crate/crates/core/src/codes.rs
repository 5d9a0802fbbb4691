//! Branch labels, hook codes and CIJT partitions for a CI-shaped T.
//!
//! A partition of diagonal lengths T is the basic triangle `Δ_d` (row `r`
//! of length `d − r`, zero-based) with one branch glued at each of the
//! `d + 1` cells of degree `d`. Position `i < e` carries a vertical branch
//! below column `i`; position `i > e` carries a horizontal branch right of
//! row `i − e − 1`. Stored values are branch lengths minus `s = max{0, k−2}`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{ci_hilbert_of, HilbertFunction, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelEntry {
    E,
    Len(usize),
}

impl fmt::Display for LabelEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelEntry::E => f.write_str("E"),
            LabelEntry::Len(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct BranchLabel {
    entries: Vec<LabelEntry>,
}

impl BranchLabel {
    pub fn new(entries: Vec<LabelEntry>) -> Self {
        BranchLabel { entries }
    }

    pub fn entries(&self) -> &[LabelEntry] {
        &self.entries
    }

    /// Index of the last gap.
    pub fn e(&self) -> Option<usize> {
        self.entries.iter().rposition(|x| *x == LabelEntry::E)
    }

    fn gaps(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| self.entries[i] == LabelEntry::E)
            .collect()
    }

    fn value(&self, i: usize) -> usize {
        match self.entries[i] {
            LabelEntry::E => 0,
            LabelEntry::Len(v) => v,
        }
    }

    /// Checks the interval structure for the given T.
    pub fn validate(&self, t: &HilbertFunction) -> Result<()> {
        let (d, k) = (t.d(), t.k());
        let bad = |why: &str| Error::InvalidLabel(format!("{self}: {why}"));
        if self.entries.len() != d + 1 {
            return Err(bad(&format!("expected {} entries", d + 1)));
        }
        let gaps = self.gaps();
        let want_gaps = if k == 1 { 2 } else { 1 };
        if gaps.len() != want_gaps {
            return Err(bad(&format!("expected {want_gaps} gap(s)")));
        }
        let mut values: Vec<usize> = (0..=d)
            .filter(|&i| !gaps.contains(&i))
            .map(|i| self.value(i))
            .collect();
        values.sort_unstable();
        let top = if k == 1 { d - 1 } else { d };
        if values != (1..=top).collect::<Vec<_>>() {
            return Err(bad(&format!("values must be a permutation of 1..={top}")));
        }
        let e = *gaps.last().unwrap();
        let low_end = gaps[0];
        if k == 1 {
            for (off, i) in (low_end + 1..e).enumerate() {
                if self.value(i) != off + 1 {
                    return Err(bad("entries between the gaps must be 1, 2, ..."));
                }
            }
        }
        let before: Vec<usize> = (0..low_end).map(|i| self.value(i)).collect();
        let after: Vec<usize> = (e + 1..=d).map(|i| self.value(i)).collect();
        let mins: Vec<usize> = runs(&before).iter().map(|r| r[0]).collect();
        if mins.windows(2).any(|w| w[1] >= w[0]) {
            return Err(bad("vertical intervals need decreasing minima"));
        }
        let maxs: Vec<usize> = runs(&after).iter().map(|r| *r.last().unwrap()).collect();
        if maxs.windows(2).any(|w| w[1] >= w[0]) {
            return Err(bad("horizontal intervals need decreasing maxima"));
        }
        Ok(())
    }
}

/// Splits into maximal runs of consecutive increasing integers.
fn runs(v: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &x in v {
        match out.last_mut() {
            Some(r) if *r.last().unwrap() + 1 == x => r.push(x),
            _ => out.push(vec![x]),
        }
    }
    out
}

impl fmt::Display for BranchLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for BranchLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = s
            .split(',')
            .map(|tok| match tok.trim() {
                "E" | "e" => Ok(LabelEntry::E),
                v => v
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v > 0)
                    .map(LabelEntry::Len)
                    .ok_or_else(|| Error::Parse(format!("bad label entry {v:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BranchLabel { entries })
    }
}

impl From<BranchLabel> for String {
    fn from(b: BranchLabel) -> String {
        b.to_string()
    }
}

impl TryFrom<String> for BranchLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn partition_to_branch_label(p: &Partition) -> Result<BranchLabel> {
    let t = ci_hilbert_of(p)?;
    let (d, s) = (t.d(), t.s());
    let conj = p.conjugate();
    // position i sits at row d - i, column i
    let gap = |i: usize| !p.contains_cell(d - i, i);
    let e = (0..=d)
        .rev()
        .find(|&i| gap(i))
        .ok_or_else(|| Error::InternalInconsistency(format!("{p} has no gap in degree {d}")))?;
    let mut entries = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let len = if i == e || gap(i) {
            None
        } else if i < e {
            conj.part(i).checked_sub(d - i + s)
        } else {
            p.part(i - e - 1).checked_sub(d - i + e + 1 + s)
        };
        entries.push(match len {
            None => LabelEntry::E,
            Some(0) => {
                return Err(Error::InternalInconsistency(format!(
                    "{p}: branch at position {i} shorter than the offset"
                )))
            }
            Some(v) => LabelEntry::Len(v),
        });
    }
    let b = BranchLabel { entries };
    b.validate(&t)
        .map_err(|err| Error::InternalInconsistency(format!("{p} gave an invalid label: {err}")))?;
    Ok(b)
}

pub fn branch_label_to_partition(b: &BranchLabel, t: &HilbertFunction) -> Result<Partition> {
    b.validate(t)?;
    let (d, s) = (t.d(), t.s());
    let e = b.e().unwrap();
    let cols: Vec<usize> = (0..e)
        .map(|i| match b.entries[i] {
            LabelEntry::E => d - i,
            LabelEntry::Len(v) => d - i + v + s,
        })
        .collect();
    let mut parts: Vec<usize> = (0..d - e).map(|r| d - r + b.value(e + 1 + r) + s).collect();
    let mut r = d - e;
    loop {
        let len = cols.iter().filter(|&&c| c > r).count();
        if len == 0 {
            break;
        }
        parts.push(len);
        r += 1;
    }
    let p = Partition::new(parts)?;
    if p.diagonal_lengths() != t.values() {
        return Err(Error::InternalInconsistency(format!(
            "label {b} glued to {p}, wrong diagonals"
        )));
    }
    Ok(p)
}

/// Compositions of the interval `lo..=hi` into consecutive blocks, by bitmask.
fn interval_compositions(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
    if lo > hi {
        return vec![vec![]];
    }
    let n = hi - lo + 1;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut blocks = vec![vec![lo]];
        for x in lo + 1..=hi {
            if mask >> (x - lo - 1) & 1 == 1 {
                blocks.push(vec![x]);
            } else {
                blocks.last_mut().unwrap().push(x);
            }
        }
        out.push(blocks);
    }
    out
}

/// For each composition and each vertical/horizontal assignment, the two
/// sequences (vertical part, horizontal part), both with intervals ordered
/// from the top values down.
fn split_labels(lo: usize, hi: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for blocks in interval_compositions(lo, hi) {
        let m = blocks.len();
        for assign in 0u64..(1u64 << m) {
            let (mut v, mut h) = (Vec::new(), Vec::new());
            for (idx, blk) in blocks.iter().enumerate().rev() {
                if assign >> idx & 1 == 1 {
                    h.extend_from_slice(blk);
                } else {
                    v.extend_from_slice(blk);
                }
            }
            out.push((v, h));
        }
    }
    out
}

/// Every valid branch label for T.
pub fn all_branch_labels(t: &HilbertFunction) -> Vec<BranchLabel> {
    let d = t.d();
    let lens = |v: &[usize]| v.iter().map(|&x| LabelEntry::Len(x)).collect::<Vec<_>>();
    let mut out = Vec::new();
    if t.k() >= 2 {
        for (v, h) in split_labels(1, d) {
            let mut entries = lens(&v);
            entries.push(LabelEntry::E);
            entries.extend(lens(&h));
            out.push(BranchLabel { entries });
        }
    } else {
        for g in 1..=d {
            let middle: Vec<usize> = (1..g).collect();
            for (v, h) in split_labels(g, d - 1) {
                let mut entries = lens(&v);
                entries.push(LabelEntry::E);
                entries.extend(lens(&middle));
                entries.push(LabelEntry::E);
                entries.extend(lens(&h));
                out.push(BranchLabel { entries });
            }
        }
    }
    out
}

/// Descending lexicographic order of parts, which refines dominance.
pub fn sort_codes_order(ps: &mut [Partition]) {
    ps.sort_by(|a, b| b.parts().cmp(a.parts()));
}

pub fn enumerate_diagonal_partitions(t: &HilbertFunction) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for b in all_branch_labels(t) {
        let p = branch_label_to_partition(&b, t)?;
        if !seen.insert(p.clone()) {
            return Err(Error::InternalInconsistency(format!(
                "label {b} repeats {p}"
            )));
        }
        out.push(p);
    }
    sort_codes_order(&mut out);
    Ok(out)
}

/// `p_{i−1} = n_{i−1} + n_i + p_i` for consecutive blocks of the power form.
pub fn satisfies_equality_criterion(p: &Partition) -> bool {
    let pf = p.power_form();
    pf.windows(2).all(|w| w[0].0 == w[0].1 + w[1].1 + w[1].0)
}

pub fn is_cijt(p: &Partition) -> Result<bool> {
    let t = ci_hilbert_of(p)?;
    let by_equality = satisfies_equality_criterion(p);
    let by_parts = p.len() == t.d() || p.len() == t.d() + t.k() - 1;
    if by_equality != by_parts {
        return Err(Error::InternalInconsistency(format!(
            "{p}: equality criterion says {by_equality}, part count says {by_parts}"
        )));
    }
    Ok(by_equality)
}

/// Ordered partitions of `n`; the composition for bitmask `m` cuts after
/// position `i` when bit `i` is set.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (0u64..(1u64 << (n - 1)))
        .map(|mask| {
            let mut comp = vec![1];
            for i in 0..n - 1 {
                if mask >> i & 1 == 1 {
                    comp.push(1);
                } else {
                    *comp.last_mut().unwrap() += 1;
                }
            }
            comp
        })
        .collect()
}

/// The CIJT partition attached to an ordered partition `(n_1, …, n_c)` of `n ≤ d`.
pub fn cijt_from_composition(t: &HilbertFunction, comp: &[usize]) -> Result<Partition> {
    let (d, k) = (t.d(), t.k());
    let n: usize = comp.iter().sum();
    if n > d || (k == 1 && n == d && d > 0) {
        return Err(Error::InvalidSubset(comp.to_vec()));
    }
    let mut blocks = Vec::new();
    let mut before = 0;
    for &ni in comp {
        blocks.push((k - 1 + 2 * d - ni - 2 * before, ni));
        before += ni;
    }
    if d > n {
        blocks.push((d - n, d - n + k - 1));
    }
    Partition::from_power_form(&blocks)
}

/// Ordered by n, then by increasing composition bitmask.
pub fn enumerate_cijt(t: &HilbertFunction) -> Result<Vec<Partition>> {
    let top = if t.k() >= 2 { t.d() } else { t.d() - 1 };
    let mut out = Vec::new();
    for n in 0..=top {
        for comp in compositions(n) {
            out.push(cijt_from_composition(t, &comp)?);
        }
    }
    Ok(out)
}

/// The flip of the smallest rectangle, from d-part CIJT to (d+k−1)-part CIJT.
pub fn iota(p: &Partition) -> Result<Partition> {
    let t = ci_hilbert_of(p)?;
    if !is_cijt(p)? || p.len() != t.d() {
        return Err(Error::NotCijtWithDParts(p.to_string()));
    }
    let mut pf = p.power_form();
    let (pt, nt) = pf.pop().unwrap();
    if pt + 1 != nt + t.k() {
        return Err(Error::InternalInconsistency(format!(
            "{p}: last block {pt}^{nt} is not of the form (a+k)^(a+1)"
        )));
    }
    pf.push((nt, pt));
    Partition::from_power_form(&pf)
}

/// Number of difference-one hooks keyed by the degree of their hand.
pub fn hooks_by_hand_degree(p: &Partition) -> BTreeMap<usize, usize> {
    let conj = p.conjugate();
    let mut out = BTreeMap::new();
    for (r, &pr) in p.parts().iter().enumerate() {
        let hand = r + pr - 1;
        for c in 0..pr {
            let arm = pr - c;
            let leg = conj.part(c) - r;
            if arm == leg + 1 {
                *out.entry(hand).or_insert(0) += 1;
            }
        }
    }
    out
}

pub fn cell_dimension(p: &Partition) -> usize {
    hooks_by_hand_degree(p).values().sum()
}

/// `dim G_T`, the cell dimension of the strong Lefschetz partition.
pub fn dim_gt(t: &HilbertFunction) -> usize {
    if t.k() >= 2 {
        1 + 2 * (t.d() - 1)
    } else {
        2 * (t.d() - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookCode {
    /// Hand degree of `counts[0]`.
    pub start_degree: usize,
    /// Traditional code, one count per branch end degree up to j.
    pub counts: Vec<usize>,
    /// The branch label with a hook count attached to each nonzero entry.
    pub subscripted: Vec<(LabelEntry, Option<usize>)>,
}

impl HookCode {
    pub fn traditional_string(&self) -> String {
        let v: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c}_{}", self.start_degree + i))
            .collect();
        v.join(",")
    }

    pub fn subscripted_string(&self) -> String {
        let v: Vec<String> = self
            .subscripted
            .iter()
            .map(|(e, c)| match (e, c) {
                (LabelEntry::Len(v), Some(c)) => format!("{v}_{c}"),
                _ => "E".to_string(),
            })
            .collect();
        v.join(",")
    }

    /// Count for label entry `i`, i.e. at hand degree `start_degree + i − 1`.
    pub fn entry(&self, i: usize) -> usize {
        self.counts[i - 1]
    }

    /// Parses the traditional form "1_3,2_4,2_5"; the subscripted part is left empty.
    pub fn parse_traditional(s: &str) -> Result<(usize, Vec<usize>)> {
        let mut start = None;
        let mut counts = Vec::new();
        for (idx, tok) in s.split(',').enumerate() {
            let (c, deg) = tok
                .trim()
                .split_once('_')
                .ok_or_else(|| Error::Parse(format!("bad hook entry {tok:?}")))?;
            let c: usize = c.parse().map_err(|_| Error::Parse(tok.into()))?;
            let deg: usize = deg.parse().map_err(|_| Error::Parse(tok.into()))?;
            let s0 = *start.get_or_insert(deg);
            if deg != s0 + idx {
                return Err(Error::Parse(format!(
                    "degrees must be consecutive in {s:?}"
                )));
            }
            counts.push(c);
        }
        Ok((
            start.ok_or_else(|| Error::Parse("empty hook code".into()))?,
            counts,
        ))
    }
}

fn first_branch_degree(t: &HilbertFunction) -> usize {
    t.d() + t.s()
}

fn code_from_label_counts(
    b: &BranchLabel,
    t: &HilbertFunction,
    count_of: impl Fn(usize) -> usize,
) -> HookCode {
    let start = first_branch_degree(t);
    let m = if t.k() >= 2 { t.d() } else { t.d() - 1 };
    let counts: Vec<usize> = (1..=m).map(&count_of).collect();
    let subscripted = b
        .entries()
        .iter()
        .map(|&e| match e {
            LabelEntry::E => (e, None),
            LabelEntry::Len(v) => (e, Some(count_of(v))),
        })
        .collect();
    HookCode {
        start_degree: start,
        counts,
        subscripted,
    }
}

/// Hook code by scanning every cell of the diagram.
pub fn hook_code_direct(p: &Partition) -> Result<HookCode> {
    let t = ci_hilbert_of(p)?;
    let b = partition_to_branch_label(p)?;
    let by_deg = hooks_by_hand_degree(p);
    let start = first_branch_degree(&t);
    if let Some((&deg, _)) = by_deg.iter().find(|(&deg, _)| deg < start || deg > t.j()) {
        return Err(Error::InternalInconsistency(format!(
            "{p}: hook hand in degree {deg} outside the branch range"
        )));
    }
    Ok(code_from_label_counts(&b, &t, |i| {
        by_deg.get(&(start + i - 1)).copied().unwrap_or(0)
    }))
}

/// Hook code read off the interval structure of the label alone.
pub fn hook_code_from_label(b: &BranchLabel, t: &HilbertFunction) -> Result<HookCode> {
    b.validate(t)?;
    let k = t.k();
    let gaps = b.gaps();
    let e = *gaps.last().unwrap();
    let low = gaps[0];
    let cap = |v: usize| if v == 1 && k >= 2 { 1 } else { 2 };
    let mut sub: BTreeMap<usize, usize> = BTreeMap::new();
    let before: Vec<usize> = (0..low).map(|i| b.value(i)).collect();
    for run in runs(&before) {
        for (idx, v) in run.into_iter().enumerate() {
            sub.insert(v, if idx == 0 { 0 } else { 1 });
        }
    }
    // k = 1: the square between the two gaps contributes one hook per branch
    for i in low + 1..e {
        sub.insert(b.value(i), 1);
    }
    let after: Vec<usize> = (e + 1..b.entries.len()).map(|i| b.value(i)).collect();
    for run in runs(&after) {
        for (idx, v) in run.into_iter().enumerate() {
            sub.insert(v, if idx == 0 { cap(v) } else { 1 });
        }
    }
    Ok(code_from_label_counts(b, t, |i| sub[&i]))
}
