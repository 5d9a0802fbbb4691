//! Graded ideals of `k[x,y]`, their Artinian quotients, and Jordan types of
//! multiplication by linear forms.
//!
//! A form of degree `i` is stored as its coefficient vector indexed by the
//! exponent of x, so column `a` is the monomial `x^a y^{i−a}`. Ideals are
//! echelonized with the highest power of y leading, which is the
//! `y > x` reverse degree-lex order used for initial ideals.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::partition::{JordanDegreeType, Partition};
use crate::poly::{BivariatePoly, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    generators: Vec<BivariatePoly>,
}

impl GradedIdeal {
    pub fn new(generators: Vec<BivariatePoly>) -> Result<Self> {
        for g in &generators {
            if g.is_zero() {
                return Err(Error::ZeroInput);
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
        }
        Ok(GradedIdeal { generators })
    }

    pub fn generators(&self) -> &[BivariatePoly] {
        &self.generators
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(|g| g.degree())
            .max()
            .unwrap_or(0)
    }

    /// `I_i` as an echelon form, spanned by monomial multiples of the generators.
    pub fn degree_piece(&self, i: u32) -> Echelon {
        let mut e = Echelon::new(i as usize + 1, (0..=i as usize).collect());
        for g in &self.generators {
            let dg = g.degree().unwrap();
            if dg > i {
                continue;
            }
            for a in 0..=i - dg {
                let m = g.mul_monomial(a, i - dg - a);
                e.insert(&m.coeff_vector(i));
            }
        }
        e
    }

    /// Applies the substitution `x ← u`, `y ← v` to every generator.
    pub fn transform(&self, u: &BivariatePoly, v: &BivariatePoly) -> Result<GradedIdeal> {
        GradedIdeal::new(self.generators.iter().map(|g| g.compose(u, v)).collect())
    }
}

impl std::fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        f.write_str(&v.join(", "))
    }
}

/// One graded piece of `R/I`.
#[derive(Clone, Debug)]
pub struct Piece {
    pub degree: u32,
    pub ideal: Echelon,
    /// Exponents of x of the standard monomials, largest first.
    pub standard: Vec<u32>,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.standard.len()
    }
}

#[derive(Clone, Debug)]
pub struct ArtinAlgebra {
    ideal: GradedIdeal,
    pieces: Vec<Piece>,
}

pub fn quotient(ideal: &GradedIdeal) -> Result<ArtinAlgebra> {
    let top_gen = ideal.max_degree();
    let mut pieces: Vec<Piece> = Vec::new();
    let mut i = 0u32;
    loop {
        let e = ideal.degree_piece(i);
        let mut standard: Vec<u32> = e.free_columns().into_iter().map(|c| c as u32).collect();
        standard.reverse();
        if standard.is_empty() {
            break;
        }
        // past the generator degrees a repeated value persists forever
        if i > top_gen && pieces.last().map(|p| p.dim()) == Some(standard.len()) {
            return Err(Error::NotArtinian);
        }
        if i > 2 * top_gen + 2 {
            return Err(Error::NotArtinian);
        }
        pieces.push(Piece {
            degree: i,
            ideal: e,
            standard,
        });
        i += 1;
    }
    Ok(ArtinAlgebra {
        ideal: ideal.clone(),
        pieces,
    })
}

impl ArtinAlgebra {
    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.dim()).collect()
    }

    pub fn dim(&self) -> usize {
        self.hilbert().iter().sum()
    }

    /// Socle degree: the last degree with `A_i ≠ 0`.
    pub fn top_degree(&self) -> u32 {
        self.pieces.len() as u32 - 1
    }

    pub fn piece(&self, i: u32) -> Option<&Piece> {
        self.pieces.get(i as usize)
    }

    pub fn dim_at(&self, i: u32) -> usize {
        self.piece(i).map_or(0, |p| p.dim())
    }

    /// Standard monomials of `A_i` as polynomials, in basis order.
    pub fn basis(&self, i: u32) -> Vec<BivariatePoly> {
        self.piece(i)
            .map(|p| {
                p.standard
                    .iter()
                    .map(|&a| BivariatePoly::monomial(a, i - a))
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Coordinates of a form of degree `i` in the standard basis of `A_i`.
    pub fn normal_form(&self, f: &BivariatePoly, i: u32) -> Vec<Q> {
        match self.piece(i) {
            None => vec![],
            Some(p) => {
                let v = p.ideal.reduce(&f.coeff_vector(i));
                p.standard.iter().map(|&a| v[a as usize].clone()).collect()
            }
        }
    }

    /// Matrix (rows = coordinates in `A_s`, columns = basis of `A_u`) of multiplication by `ℓ^{s−u}`.
    pub fn mult_power_matrix(&self, ell: &BivariatePoly, u: u32, s: u32) -> Vec<Vec<Q>> {
        let lp = ell.pow(s - u);
        let cols: Vec<Vec<Q>> = self
            .basis(u)
            .iter()
            .map(|m| self.normal_form(&(m * &lp), s))
            .collect();
        let nrows = self.dim_at(s);
        (0..nrows)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect()
    }

    pub fn rank_mult_power(&self, ell: &BivariatePoly, u: u32, s: u32) -> Result<usize> {
        if u > s || s > self.top_degree() {
            return Err(Error::DegreeOutOfRange(format!(
                "u={u}, s={s}, socle degree {}",
                self.top_degree()
            )));
        }
        check_linear(ell)?;
        Ok(self.rank_raw(ell, u, s))
    }

    fn rank_raw(&self, ell: &BivariatePoly, u: u32, s: u32) -> usize {
        if s > self.top_degree() {
            return 0;
        }
        if u == s {
            return self.dim_at(u);
        }
        linalg::rank(&self.mult_power_matrix(ell, u, s))
    }

    /// The Jordan type of multiplication by `ℓ`.
    ///
    /// The map is homogeneous of degree one, so `rank(m_ℓ^p)` is the sum of
    /// the ranks of its graded blocks `A_u → A_{u+p}`.
    pub fn jordan_type(&self, ell: &BivariatePoly) -> Result<Partition> {
        check_linear(ell)?;
        let top = self.top_degree();
        let rank_pow = |p: u32| -> usize {
            if p == 0 {
                return self.dim();
            }
            (0..=top.saturating_sub(p))
                .filter(|&u| u + p <= top)
                .map(|u| self.rank_raw(ell, u, u + p))
                .sum()
        };
        let ranks: Vec<usize> = (0..=top + 2).map(rank_pow).collect();
        let mut parts = Vec::new();
        for s in (1..ranks.len()).rev() {
            let at_least_s = ranks[s - 1] - ranks[s];
            let at_least_next = if s + 1 < ranks.len() {
                ranks[s] - ranks[s + 1]
            } else {
                0
            };
            for _ in 0..at_least_s - at_least_next {
                parts.push(s);
            }
        }
        Partition::new(parts)
    }

    pub fn jordan_degree_type(&self, ell: &BivariatePoly) -> Result<JordanDegreeType> {
        check_linear(ell)?;
        let top = self.top_degree();
        let r = |u: i64, t: u32| -> usize {
            if u < 0 {
                0
            } else {
                self.rank_raw(ell, u as u32, t)
            }
        };
        // n(i, s): strings starting in degree i of length at least s
        let n = |i: u32, s: u32| -> usize {
            if i + s - 1 > top {
                return 0;
            }
            r(i as i64, i + s - 1) - r(i as i64 - 1, i + s - 1)
        };
        let mut out = JordanDegreeType::default();
        for i in 0..=top {
            for s in 1..=top + 1 - i {
                let m = n(i, s) - n(i, s + 1);
                if m > 0 {
                    out.strings.insert((i as usize, s as usize), m);
                }
            }
        }
        Ok(out)
    }

    /// Number of minimal generators in each degree.
    pub fn minimal_generator_degrees(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let top = self.top_degree() + 1;
        for i in 0..=top {
            let full = self.ideal.degree_piece(i).rank();
            let from_below = if i == 0 {
                0
            } else {
                let below = self.ideal.degree_piece(i - 1);
                let mut e = Echelon::new(i as usize + 1, (0..=i as usize).collect());
                for row in below.rows() {
                    let f = BivariatePoly::from_coeff_vector(i - 1, row);
                    e.insert(&f.mul_monomial(1, 0).coeff_vector(i));
                    e.insert(&f.mul_monomial(0, 1).coeff_vector(i));
                }
                e.rank()
            };
            for _ in from_below..full {
                out.push(i);
            }
        }
        out
    }
}

fn check_linear(ell: &BivariatePoly) -> Result<()> {
    if ell.is_zero() {
        return Err(Error::ZeroForm);
    }
    if ell.degree() != Some(1) || !ell.is_homogeneous() {
        return Err(Error::Parse(format!("{ell} is not a linear form")));
    }
    Ok(())
}

/// Whether `R/I` is a complete intersection, with its minimal generator degrees.
pub fn is_complete_intersection(ideal: &GradedIdeal) -> Result<(bool, Vec<u32>)> {
    let a = quotient(ideal)?;
    let degs = a.minimal_generator_degrees();
    Ok((degs.len() == 2, degs))
}

/// The ideal `{f : f ∘ F = 0}` with minimal homogeneous generators.
pub fn annihilator(f: &BivariatePoly) -> Result<GradedIdeal> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(f.to_string()));
    }
    let j = f.degree().unwrap();
    let mut gens: Vec<BivariatePoly> = Vec::new();
    for i in 0..=j + 1 {
        let kernel: Vec<Vec<Q>> = if i > j {
            (0..=i).map(|a| unit(i as usize + 1, a as usize)).collect()
        } else {
            let cols: Vec<Vec<Q>> = (0..=i)
                .map(|a| {
                    BivariatePoly::monomial(a, i - a)
                        .contract(f)
                        .coeff_vector(j - i)
                })
                .collect();
            let rows: Vec<Vec<Q>> = (0..=(j - i) as usize)
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                .collect();
            linalg::nullspace(&rows, i as usize + 1)
        };
        let mut span = GradedIdeal {
            generators: gens.clone(),
        }
        .degree_piece(i);
        for v in kernel {
            if span.insert(&v) {
                gens.push(primitive(&BivariatePoly::from_coeff_vector(i, &v)));
            }
        }
    }
    GradedIdeal::new(gens)
}

fn unit(n: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[k] = Q::one();
    v
}

/// Scales to integer coefficients with no common factor and a positive leading coefficient.
fn primitive(f: &BivariatePoly) -> BivariatePoly {
    use num_integer::Integer;
    let l = f
        .terms()
        .fold(num_bigint::BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let g = f.scale(&Q::from_integer(l));
    let gcd = g
        .terms()
        .fold(num_bigint::BigInt::zero(), |acc, (_, c)| acc.gcd(c.numer()));
    let mut out = g.scale(&Q::new(num_bigint::BigInt::one(), gcd));
    let lead = out
        .terms()
        .max_by_key(|(&(a, b), _)| (a + b, b))
        .map(|(_, c)| c.clone())
        .unwrap();
    if lead < Q::zero() {
        out = out.scale(&-Q::one());
    }
    out
}

/// Hilbert function of `R/Ann F` from catalecticant ranks.
pub fn dual_hilbert(f: &BivariatePoly) -> Result<Vec<usize>> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let j = f.degree().unwrap();
    Ok((0..=j)
        .map(|i| {
            let rows: Vec<Vec<Q>> = (0..=i)
                .map(|a| {
                    BivariatePoly::monomial(a, i - a)
                        .contract(f)
                        .coeff_vector(j - i)
                })
                .collect();
            linalg::rank(&rows)
        })
        .collect())
}

/// A monomial ideal `E_Q` together with its partition `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialCell {
    pub partition: Partition,
    /// Minimal generators as `(exp of x, exp of y)`, in order of increasing y.
    pub generators: Vec<(u32, u32)>,
}

impl MonomialCell {
    /// `E_Q` generated by `x^{p_1}, x^{p_2} y^{a_1}, …, y^{a_t}`.
    pub fn from_partition(p: &Partition) -> MonomialCell {
        let pf = p.power_form();
        let mut gens = Vec::new();
        let mut a = 0u32;
        for &(pi, ni) in &pf {
            gens.push((pi as u32, a));
            a += ni as u32;
        }
        gens.push((0, a));
        MonomialCell {
            partition: p.clone(),
            generators: gens,
        }
    }

    pub fn ideal(&self) -> GradedIdeal {
        GradedIdeal {
            generators: self
                .generators
                .iter()
                .map(|&(a, b)| BivariatePoly::monomial(a, b))
                .collect(),
        }
    }

    pub fn generators_string(&self) -> String {
        let v: Vec<String> = self
            .generators
            .iter()
            .map(|&(a, b)| BivariatePoly::monomial(a, b).to_string())
            .collect();
        v.join(", ")
    }
}

/// The initial ideal in the `(y, ℓ)` order, after the change of variables taking `ℓ` to x.
pub fn initial_ideal(ideal: &GradedIdeal, ell: &BivariatePoly) -> Result<MonomialCell> {
    check_linear(ell)?;
    let (a, b) = (ell.coeff(1, 0), ell.coeff(0, 1));
    // new coordinates: x' = ℓ and y' = y (or x when ℓ is a multiple of y)
    let (u, v) = if !a.is_zero() {
        let u = &(&BivariatePoly::x() - &BivariatePoly::y().scale(&b)).scale(&a.recip());
        (u.clone(), BivariatePoly::y())
    } else {
        (BivariatePoly::y(), BivariatePoly::x().scale(&b.recip()))
    };
    let moved = ideal.transform(&u, &v)?;
    let alg = quotient(&moved)?;
    let top = alg.top_degree();
    let mut rows: Vec<usize> = Vec::new();
    for i in 0..=top {
        for &a in &alg.piece(i).unwrap().standard {
            let r = (i - a) as usize;
            if rows.len() <= r {
                rows.resize(r + 1, 0);
            }
            rows[r] += 1;
        }
    }
    // leading monomials in degrees up to top + 1, checked to form an order ideal complement
    let in_e = |xa: u32, yb: u32| -> bool {
        let i = xa + yb;
        match alg.piece(i) {
            None => true,
            Some(p) => !p.standard.contains(&xa),
        }
    };
    let mut gens = Vec::new();
    for i in 0..=top + 1 {
        for xa in 0..=i {
            let yb = i - xa;
            if in_e(xa, yb) && (xa == 0 || !in_e(xa - 1, yb)) && (yb == 0 || !in_e(xa, yb - 1)) {
                gens.push((xa, yb));
            }
        }
    }
    gens.sort_by_key(|&(_, yb)| yb);
    let partition = Partition::new(rows.into_iter().filter(|&r| r > 0).collect())?;
    for (r, &len) in partition.parts().iter().enumerate() {
        for c in 0..len as u32 {
            if in_e(c, r as u32) {
                return Err(Error::InternalInconsistency(
                    "standard monomials are not a Ferrers diagram".into(),
                ));
            }
        }
    }
    Ok(MonomialCell {
        partition,
        generators: gens,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly_list;

    fn ideal(s: &str) -> GradedIdeal {
        GradedIdeal::new(parse_poly_list(s).unwrap()).unwrap()
    }
    fn poly(s: &str) -> BivariatePoly {
        s.parse().unwrap()
    }
    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn hilbert_functions() {
        assert_eq!(
            quotient(&ideal("x^2, y^3")).unwrap().hilbert(),
            vec![1, 2, 2, 1]
        );
        assert_eq!(
            quotient(&ideal("x^3, y^4")).unwrap().hilbert(),
            vec![1, 2, 3, 3, 2, 1]
        );
        assert_eq!(
            quotient(&ideal("x^2*y, y^4 + x^4")).unwrap().hilbert(),
            vec![1, 2, 3, 3, 2, 1]
        );
        assert!(matches!(quotient(&ideal("x^2")), Err(Error::NotArtinian)));
        assert!(matches!(
            quotient(&ideal("x^2*y, y^4")),
            Err(Error::NotArtinian)
        ));
    }

    #[test]
    fn example_one_one_jordan_types() {
        let a = quotient(&ideal("x^2, y^3")).unwrap();
        assert_eq!(a.jordan_type(&poly("y")).unwrap(), part("3,3"));
        assert_eq!(a.jordan_type(&poly("x")).unwrap(), part("2,2,2"));
        assert_eq!(a.jordan_type(&poly("x+y")).unwrap(), part("4,2"));
        let b = quotient(&ideal("x*y, x^3 + y^3")).unwrap();
        assert_eq!(b.jordan_type(&poly("x")).unwrap(), part("4,1,1"));
    }

    #[test]
    fn apolar_examples() {
        let f = poly("X^2*Y^3");
        let ann = annihilator(&f).unwrap();
        assert_eq!(ann.to_string(), "x^3, y^4");
        assert_eq!(annihilator(&poly("X*Y^2")).unwrap().to_string(), "x^2, y^3");
        let g = poly("(X+Y)^4 + (X-Y)^4 + (X+2Y)^4");
        assert_eq!(
            quotient(&annihilator(&g).unwrap()).unwrap().hilbert(),
            vec![1, 2, 3, 2, 1]
        );
        assert_eq!(dual_hilbert(&g).unwrap(), vec![1, 2, 3, 2, 1]);
        let a = quotient(&ann).unwrap();
        assert_eq!(a.jordan_type(&poly("x")).unwrap(), part("3,3,3,3"));
        assert_eq!(a.jordan_type(&poly("y")).unwrap(), part("4,4,4"));
        assert_eq!(a.jordan_type(&poly("x+y")).unwrap(), part("6,4,2"));
        assert_eq!(a.rank_mult_power(&poly("x"), 1, 4).unwrap(), 0);
        assert_eq!(a.rank_mult_power(&poly("x+y"), 0, 5).unwrap(), 1);
        assert_eq!(a.rank_mult_power(&poly("x+y"), 1, 3).unwrap(), 2);
        assert!(matches!(
            annihilator(&BivariatePoly::zero()),
            Err(Error::ZeroInput)
        ));
    }

    #[test]
    fn degree_types() {
        let a = quotient(&ideal("x^2, y^3")).unwrap();
        let jdt = a.jordan_degree_type(&poly("x")).unwrap();
        assert_eq!(jdt.entries(), vec![(0, 2, 1), (1, 2, 1), (2, 2, 1)]);
        let b = quotient(&annihilator(&poly("X^2*Y^3")).unwrap()).unwrap();
        let jdt = b.jordan_degree_type(&poly("x+y")).unwrap();
        assert_eq!(jdt.entries(), vec![(0, 6, 1), (1, 4, 1), (2, 2, 1)]);
        assert!(b.jordan_degree_type(&poly("x")).unwrap().is_symmetric(5));
        assert_eq!(a.rank_mult_power(&poly("x+y"), 0, 3).unwrap(), 1);
        assert!(a.rank_mult_power(&poly("x"), 2, 1).is_err());
        assert!(matches!(
            a.jordan_type(&BivariatePoly::zero()),
            Err(Error::ZeroForm)
        ));
    }

    #[test]
    fn initial_ideals() {
        let cell = initial_ideal(&ideal("x^2*y, y^4 + x^4"), &poly("x")).unwrap();
        assert_eq!(cell.partition, part("6,2,2,2"));
        assert_eq!(cell.generators, vec![(6, 0), (2, 1), (0, 4)]);
        assert_eq!(cell, MonomialCell::from_partition(&part("6,2,2,2")));
        let cell = initial_ideal(&ideal("x^2, y^3"), &poly("x")).unwrap();
        assert_eq!(cell.generators_string(), "x^2, y^3");
        assert_eq!(cell.partition, part("2,2,2"));
        // direction y: the roles of x and y swap
        let cell = initial_ideal(&ideal("x^2, y^3"), &poly("y")).unwrap();
        assert_eq!(cell.partition, part("3,3"));
    }

    #[test]
    fn complete_intersections() {
        assert_eq!(
            is_complete_intersection(&ideal("x^2*y, y^4 + x^4")).unwrap(),
            (true, vec![3, 4])
        );
        assert!(!is_complete_intersection(&ideal("x*y, x^3, y^4")).unwrap().0);
        assert_eq!(
            is_complete_intersection(&ideal("x^3, y^4")).unwrap(),
            (true, vec![3, 4])
        );
        // redundant generators do not count
        assert_eq!(
            is_complete_intersection(&ideal("x^3, y^4, x^4")).unwrap(),
            (true, vec![3, 4])
        );
    }
}
