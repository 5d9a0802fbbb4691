//! Partitions, Ferrers diagrams and CI-shaped Hilbert functions.
//!
//! Cells of a Ferrers diagram are indexed `(r, c)` from zero; row `r` holds
//! the monomials `y^r x^c` for `c < parts[r]`, so the cell lies in degree
//! `r + c`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from power form `(p_i, n_i)`, skipping zero multiplicities.
    pub fn from_power_form(blocks: &[(usize, usize)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(p, n) in blocks {
            parts.extend(std::iter::repeat_n(p, n));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `p_r`, or 0 past the last row.
    pub fn part(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        c < self.part(r)
    }

    /// Distinct parts with multiplicities, largest part first.
    pub fn power_form(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, n)) if *q == p => *n += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Number of cells on each anti-diagonal `r + c = i`.
    pub fn diagonal_lengths(&self) -> Vec<usize> {
        let top = self
            .parts
            .iter()
            .enumerate()
            .map(|(r, &p)| r + p)
            .max()
            .unwrap_or(0);
        let mut t = vec![0; top];
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p {
                t[r + c] += 1;
            }
        }
        t
    }

    /// `Q <= P` in dominance order, with `self` as `Q`.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_leq(self, other)
    }
}

pub fn dominance_leq(q: &Partition, p: &Partition) -> Result<bool> {
    if q.size() != p.size() {
        return Err(Error::SizeMismatch(q.size(), p.size()));
    }
    let n = q.len().max(p.len());
    let (mut sq, mut sp) = (0, 0);
    for i in 0..n {
        sq += q.part(i);
        sp += p.part(i);
        if sq > sp {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parses a comma list with caret multiplicities, e.g. `19^2,15^2,10^3,3^4`.
pub fn parse_caret_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    let mut out = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let (base, mult) = match tok.split_once('^') {
            Some((b, m)) => (b.trim(), m.trim()),
            None => (tok, "1"),
        };
        let base: usize = base
            .parse()
            .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?;
        let mult: usize = mult
            .parse()
            .map_err(|_| Error::Parse(format!("bad multiplicity in {tok:?}")))?;
        if mult == 0 {
            return Err(Error::Parse(format!("zero multiplicity in {tok:?}")));
        }
        out.extend(std::iter::repeat_n(base, mult));
    }
    Ok(out)
}

/// Inverse of [`parse_caret_list`]: runs of equal entries get a caret.
pub fn format_caret_list(values: &[usize]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let mut n = 1;
        while i + n < values.len() && values[i + n] == values[i] {
            n += 1;
        }
        out.push(if n == 1 {
            values[i].to_string()
        } else {
            format!("{}^{}", values[i], n)
        });
        i += n;
    }
    out.join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_caret_list(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_caret_list(s)?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{s:?} is not weakly decreasing")));
        }
        Partition::new(parts)
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A Hilbert function of shape `(1,2,…,d−1,d^k,d−1,…,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct HilbertFunction {
    values: Vec<usize>,
    d: usize,
    k: usize,
}

/// Returns `(d, k, j)` if `t` has complete-intersection shape.
pub fn validate_ci_hilbert(t: &[usize]) -> Result<(usize, usize, usize)> {
    let bad = || Error::NotCiShape(t.to_vec());
    let d = *t.iter().max().ok_or_else(bad)?;
    if d == 0 {
        return Err(bad());
    }
    let k = t.iter().filter(|&&v| v == d).count();
    if t.len() != 2 * d + k - 2 {
        return Err(bad());
    }
    let expected = ci_shape(d, k);
    if expected != t {
        return Err(bad());
    }
    Ok((d, k, 2 * d + k - 3))
}

fn ci_shape(d: usize, k: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..d).collect();
    v.extend(std::iter::repeat_n(d, k));
    v.extend((1..d).rev());
    v
}

impl HilbertFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let (d, k, _) = validate_ci_hilbert(&values)?;
        Ok(HilbertFunction { values, d, k })
    }

    /// The CI shape with height `d ≥ 1` and multiplicity `k ≥ 1`.
    pub fn from_dk(d: usize, k: usize) -> Result<Self> {
        if d == 0 || k == 0 {
            return Err(Error::NotCiShape(vec![]));
        }
        HilbertFunction::new(ci_shape(d, k))
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
    pub fn d(&self) -> usize {
        self.d
    }
    pub fn k(&self) -> usize {
        self.k
    }
    /// Socle degree.
    pub fn j(&self) -> usize {
        2 * self.d + self.k - 3
    }
    pub fn size(&self) -> usize {
        self.values.iter().sum()
    }
    /// Thickening offset `max{0, k−2}` used by branch labels.
    pub fn s(&self) -> usize {
        self.k.saturating_sub(2)
    }
    pub fn at(&self, i: usize) -> usize {
        self.values.get(i).copied().unwrap_or(0)
    }

    /// Strong Lefschetz Jordan type `T^∨ = (2d+k−2, 2d+k−4, …, k)`.
    pub fn sl_partition(&self) -> Partition {
        let parts = (0..self.d)
            .map(|i| 2 * self.d + self.k - 2 - 2 * i)
            .collect();
        Partition { parts }
    }

    /// Diagonal lengths of `p` checked against this T.
    pub fn check_partition(&self, p: &Partition) -> Result<()> {
        let found = p.diagonal_lengths();
        if found != self.values {
            return Err(Error::DiagonalMismatch {
                expected: self.values.clone(),
                found,
            });
        }
        Ok(())
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_caret_list(&self.values))
    }
}

impl FromStr for HilbertFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HilbertFunction::new(parse_caret_list(s)?)
    }
}

impl From<HilbertFunction> for String {
    fn from(t: HilbertFunction) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for HilbertFunction {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// The T of a partition whose diagonal lengths have CI shape.
pub fn ci_hilbert_of(p: &Partition) -> Result<HilbertFunction> {
    HilbertFunction::new(p.diagonal_lengths())
}

/// Strings of a graded decomposition: `(start degree, length) -> multiplicity`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanDegreeType {
    pub strings: BTreeMap<(usize, usize), usize>,
}

impl JordanDegreeType {
    pub fn coverage(&self) -> Vec<usize> {
        let top = self.strings.keys().map(|&(i, s)| i + s).max().unwrap_or(0);
        let mut t = vec![0; top];
        for (&(i, s), &m) in &self.strings {
            for v in &mut t[i..i + s] {
                *v += m;
            }
        }
        t
    }

    /// The Jordan type: string lengths, sorted decreasingly.
    pub fn partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&(_, s), &m) in &self.strings {
            parts.extend(std::iter::repeat_n(s, m));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `dim V_{i,s} = dim V_{j+1−s−i,s}` for all strings.
    pub fn is_symmetric(&self, j: usize) -> bool {
        self.strings.iter().all(|(&(i, s), &m)| {
            (j + 1)
                .checked_sub(s + i)
                .map(|i2| self.strings.get(&(i2, s)).copied().unwrap_or(0) == m)
                .unwrap_or(false)
        })
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize)> {
        self.strings.iter().map(|(&(i, s), &m)| (i, s, m)).collect()
    }
}

/// Searches for a symmetric Jordan degree type with string lengths `P` and coverage `T`.
pub fn symmetric_jdt(p: &Partition, t: &HilbertFunction) -> Result<Option<JordanDegreeType>> {
    t.check_partition(p)?;
    let j = t.j();
    let mut remaining = t.values().to_vec();
    let blocks = p.power_form();
    let mut out = JordanDegreeType::default();
    if place_blocks(&blocks, 0, j, &mut remaining, &mut out) {
        Ok(Some(out))
    } else {
        Ok(None)
    }
}

pub fn is_symmetric_jdt(p: &Partition, t: &HilbertFunction) -> Result<bool> {
    Ok(symmetric_jdt(p, t)?.is_some())
}

// Strings of one length must form a multiset closed under i -> j+1-s-i, so
// each length is placed as mirror pairs plus possibly one self-mirrored start.
fn place_blocks(
    blocks: &[(usize, usize)],
    idx: usize,
    j: usize,
    remaining: &mut Vec<usize>,
    out: &mut JordanDegreeType,
) -> bool {
    if idx == blocks.len() {
        return remaining.iter().all(|&r| r == 0);
    }
    let (s, n) = blocks[idx];
    if s > j + 1 {
        return false;
    }
    let span = j + 1 - s; // start i ranges over 0..=span, mirror is span - i
    let centre = if span.is_multiple_of(2) {
        Some(span / 2)
    } else {
        None
    };
    let options: Vec<usize> = match (n % 2, centre) {
        (1, Some(c)) => vec![c],
        (1, None) => return false,
        _ => vec![],
    };
    let pairs = n / 2;
    let mut chosen: Vec<usize> = Vec::new();
    for &c in &options {
        if !add_string(remaining, c, s) {
            return false;
        }
        *out.strings.entry((c, s)).or_insert(0) += 1;
    }
    let ok = place_pairs(blocks, idx, j, span, pairs, 0, &mut chosen, remaining, out);
    if !ok {
        for &c in &options {
            remove_string(remaining, c, s);
            dec(out, (c, s));
        }
    }
    ok
}

#[allow(clippy::too_many_arguments)]
fn place_pairs(
    blocks: &[(usize, usize)],
    idx: usize,
    j: usize,
    span: usize,
    pairs_left: usize,
    min_start: usize,
    chosen: &mut Vec<usize>,
    remaining: &mut Vec<usize>,
    out: &mut JordanDegreeType,
) -> bool {
    let s = blocks[idx].0;
    if pairs_left == 0 {
        return place_blocks(blocks, idx + 1, j, remaining, out);
    }
    // a pair is (i, span - i) with i <= span - i
    for i in min_start..=span / 2 {
        let mirror = span - i;
        if !add_string(remaining, i, s) {
            continue;
        }
        if !add_string(remaining, mirror, s) {
            remove_string(remaining, i, s);
            continue;
        }
        *out.strings.entry((i, s)).or_insert(0) += 1;
        *out.strings.entry((mirror, s)).or_insert(0) += 1;
        chosen.push(i);
        if place_pairs(
            blocks,
            idx,
            j,
            span,
            pairs_left - 1,
            i,
            chosen,
            remaining,
            out,
        ) {
            return true;
        }
        chosen.pop();
        dec(out, (i, s));
        dec(out, (mirror, s));
        remove_string(remaining, i, s);
        remove_string(remaining, mirror, s);
    }
    false
}

fn add_string(remaining: &mut [usize], i: usize, s: usize) -> bool {
    if i + s > remaining.len() || remaining[i..i + s].contains(&0) {
        return false;
    }
    for r in &mut remaining[i..i + s] {
        *r -= 1;
    }
    true
}

fn remove_string(remaining: &mut [usize], i: usize, s: usize) {
    for r in &mut remaining[i..i + s] {
        *r += 1;
    }
}

fn dec(out: &mut JordanDegreeType, key: (usize, usize)) {
    if let Some(m) = out.strings.get_mut(&key) {
        *m -= 1;
        if *m == 0 {
            out.strings.remove(&key);
        }
    }
}

/// All partitions of `n`, largest parts first, in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn diagonal_lengths_examples() {
        assert_eq!(p("4,4,4").diagonal_lengths(), vec![1, 2, 3, 3, 2, 1]);
        assert_eq!(p("6,2,2,1,1").diagonal_lengths(), vec![1, 2, 3, 3, 2, 1]);
        assert_eq!(p("1").diagonal_lengths(), vec![1]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("4,2").conjugate(), p("2,2,1,1"));
        assert_eq!(p("6,4,2").conjugate(), p("3,3,2,2,1,1"));
        let q = p("19^2,15^2,10^3,3^4");
        assert_eq!(q.conjugate().conjugate(), q);
    }

    #[test]
    fn sl_partitions() {
        let t: HilbertFunction = "1,2,3,3,2,1".parse().unwrap();
        assert_eq!(t.sl_partition(), p("6,4,2"));
        assert_eq!(
            "1,2,2,1".parse::<HilbertFunction>().unwrap().sl_partition(),
            p("4,2")
        );
        assert_eq!(
            "1,2,1".parse::<HilbertFunction>().unwrap().sl_partition(),
            p("3,1")
        );
    }

    #[test]
    fn ci_shapes() {
        assert_eq!(
            validate_ci_hilbert(&[1, 2, 3, 4, 3, 2, 1]).unwrap(),
            (4, 1, 6)
        );
        assert_eq!(validate_ci_hilbert(&[1, 2, 2, 2, 1]).unwrap(), (2, 3, 4));
        assert!(validate_ci_hilbert(&[1, 3, 1]).is_err());
        assert!(validate_ci_hilbert(&[1, 2, 2, 2]).is_err());
        assert_eq!(validate_ci_hilbert(&[1]).unwrap(), (1, 1, 0));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p("3,3"), &p("4,2")).unwrap());
        assert!(!dominance_leq(&p("5,5,2"), &p("6,3,3")).unwrap());
        assert!(!dominance_leq(&p("6,3,3"), &p("5,5,2")).unwrap());
        assert!(dominance_leq(&p("17^2,10^5,4,1^2"), &p("17^2,13^2,8^3,4,1^2")).unwrap());
        assert!(matches!(
            dominance_leq(&p("3"), &p("2")),
            Err(Error::SizeMismatch(3, 2))
        ));
    }

    #[test]
    fn symmetric_examples() {
        let t: HilbertFunction = "1,2,2,1".parse().unwrap();
        assert!(is_symmetric_jdt(&p("2,2,1,1"), &t).unwrap());
        assert!(!is_symmetric_jdt(&p("3,1,1,1"), &t).unwrap());
        let t9: HilbertFunction = "1,2,3,3,2,1".parse().unwrap();
        let w = symmetric_jdt(&p("6,2,2,1,1"), &t9).unwrap().unwrap();
        assert_eq!(w.coverage(), t9.values());
        assert!(w.is_symmetric(t9.j()));
        assert_eq!(w.partition(), p("6,2,2,1,1"));
    }

    #[test]
    fn caret_round_trip() {
        assert_eq!(p("19^2,15^2,10^3,3^4").to_string(), "19^2,15^2,10^3,3^4");
        assert_eq!(
            "1,2,3^2,2,1".parse::<HilbertFunction>().unwrap().values(),
            &[1, 2, 3, 3, 2, 1]
        );
        assert!("3,4".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }
}
