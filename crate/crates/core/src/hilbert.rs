//! ℕⁿ-graded Hilbert-series numerators, gradings deg: ℤⁿ → A, P-vectors and
//! edge-direction discovery.
//!
//! The numerator K of H(K\[x\]/M) = K/∏(1−x_i) is computed by the pivot
//! recursion K(M′+⟨m⟩) = K(M′) − x^m·K(M′:m). Candidate edge directions come
//! either from the binomial factors of K₁−K₂ (bounded divisibility search
//! over the Newton box) or from P-vector differences.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::intpoly::IntPoly;
use crate::monomial::{Direction, Monomial};

/// Pivot choice for the numerator recursion; both must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    Last,
    First,
}

/// The numerator K(M) of the ℕⁿ-graded Hilbert series of K\[x\]/M.
pub fn hilbert_numerator(m: &MonomialIdeal) -> IntPoly {
    hilbert_numerator_with_pivot(m, Pivot::Last)
}

pub fn hilbert_numerator_with_pivot(m: &MonomialIdeal, pivot: Pivot) -> IntPoly {
    numerator_rec(m.nvars(), m.generators(), pivot)
}

fn numerator_rec(n: usize, gens: &[Monomial], pivot: Pivot) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one(n);
    }
    let (m, rest): (&Monomial, Vec<Monomial>) = match pivot {
        Pivot::Last => {
            let (m, rest) = gens.split_last().unwrap();
            (m, rest.to_vec())
        }
        Pivot::First => {
            let (m, rest) = gens.split_first().unwrap();
            (m, rest.to_vec())
        }
    };
    let prefix = MonomialIdeal::new(n, rest).expect("generators share dimension");
    let colon = prefix.quotient_by_monomial(m);
    let k_prefix = numerator_rec(n, prefix.generators(), pivot);
    let k_colon = numerator_rec(n, colon.generators(), pivot);
    k_prefix.sub(&k_colon.mul_term(m, &BigInt::from(1)))
}

/// A grading deg: ℤⁿ → A given by integer rows, coordinate i taken modulo
/// `moduli[i]` when nonzero (0 marks a free coordinate).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    n: usize,
    matrix: Vec<Vec<i64>>,
    moduli: Vec<u64>,
}

impl Grading {
    pub fn new(n: usize, matrix: Vec<Vec<i64>>, moduli: Vec<u64>) -> Result<Self> {
        for row in &matrix {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        if moduli.len() != matrix.len() {
            return Err(Error::DimensionMismatch {
                expected: matrix.len(),
                found: moduli.len(),
            });
        }
        Ok(Grading { n, matrix, moduli })
    }

    /// The zero grading A = 0 (a single degree).
    pub fn trivial(n: usize) -> Self {
        Grading {
            n,
            matrix: vec![],
            moduli: vec![],
        }
    }

    /// The total-degree grading ℤⁿ → ℤ.
    pub fn total_degree(n: usize) -> Self {
        Grading {
            n,
            matrix: vec![vec![1; n]],
            moduli: vec![0],
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn is_torsion_free(&self) -> bool {
        self.moduli.iter().all(|&m| m == 0)
    }

    pub fn degree_of_vec(&self, v: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .zip(&self.moduli)
            .map(|(row, &md)| {
                let d: i64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
                if md == 0 {
                    d
                } else {
                    d.rem_euclid(md as i64)
                }
            })
            .collect()
    }

    pub fn degree(&self, m: &Monomial) -> Vec<i64> {
        let v: Vec<i64> = m.exponents().iter().map(|&e| e as i64).collect();
        self.degree_of_vec(&v)
    }

    /// A functional ℓ with ℓ·deg(e_i) > 0 for all i, searched over
    /// ‖ℓ‖∞ ≤ 16. Such a certificate exists iff the grading is positive
    /// (torsion-free case).
    pub fn positive_certificate(&self) -> Option<Vec<i64>> {
        if !self.is_torsion_free() {
            return None;
        }
        let q = self.matrix.len();
        if q == 0 {
            return if self.n == 0 { Some(vec![]) } else { None };
        }
        const BOUND: i64 = 16;
        for shell in 1..=BOUND {
            let mut found: Option<Vec<i64>> = None;
            enumerate_box(q, shell, &mut |ell| {
                if found.is_some() || ell.iter().all(|&x| x.abs() < shell) {
                    return;
                }
                let ok = (0..self.n).all(|j| {
                    let w: i64 = self
                        .matrix
                        .iter()
                        .zip(ell)
                        .map(|(row, &l)| row[j] * l)
                        .sum();
                    w > 0
                });
                if ok {
                    found = Some(ell.to_vec());
                }
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Positivity: only the constants have degree 0, i.e. ℕⁿ ∩ ker(deg) = 0.
    /// Torsion gradings are never positive. Decided by the certificate search
    /// with a fallback search for a small kernel vector.
    pub fn is_positive(&self) -> bool {
        if !self.is_torsion_free() {
            return false;
        }
        if self.positive_certificate().is_some() {
            return true;
        }
        // Certificate absent: by Gordan duality a kernel vector exists; the
        // bounded search below confirms it at this scale.
        const BOUND: i64 = 16;
        let mut kernel = false;
        enumerate_nonneg_box(self.n, BOUND, &mut |v| {
            if kernel || v.iter().all(|&x| x == 0) {
                return;
            }
            if self.degree_of_vec(v).iter().all(|&d| d == 0) {
                kernel = true;
            }
        });
        debug_assert!(
            kernel || self.n > 4,
            "no certificate and no small kernel vector"
        );
        false
    }
}

fn enumerate_box(dim: usize, bound: i64, f: &mut impl FnMut(&[i64])) {
    let mut v = vec![-bound; dim];
    if dim == 0 {
        f(&v);
        return;
    }
    loop {
        f(&v);
        let mut i = dim;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] <= bound {
                break;
            }
            v[i] = -bound;
        }
    }
}

fn enumerate_nonneg_box(dim: usize, bound: i64, f: &mut impl FnMut(&[i64])) {
    let mut v = vec![0i64; dim];
    if dim == 0 {
        f(&v);
        return;
    }
    loop {
        f(&v);
        let mut i = dim;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] <= bound {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Equality of Hilbert functions tested on the numerators: substitute
/// x_i ↦ [deg(e_i)] into K₁ − K₂ over the integer monoid algebra of A and
/// check the result is zero.
pub fn hilbert_equal_under_grading(m1: &MonomialIdeal, m2: &MonomialIdeal, g: &Grading) -> bool {
    let diff = hilbert_numerator(m1).sub(&hilbert_numerator(m2));
    let mut sums: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (m, c) in diff.terms() {
        let d = g.degree(m);
        let entry = sums.entry(d).or_insert_with(BigInt::zero);
        *entry += c;
    }
    sums.values().all(|c| c.is_zero())
}

/// The grading ℤⁿ → ℤⁿ/ℤc ≅ ℤ^{n−1} for primitive c, presented by the last
/// n−1 rows of a unimodular matrix U with U·c = e₁.
pub fn quotient_grading(c: &Direction) -> Result<Grading> {
    if !c.is_primitive() {
        return Err(Error::NonPrimitiveDirection);
    }
    let n = c.nvars();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect();
    let mut v: Vec<i64> = c.entries().to_vec();
    for i in (1..n).rev() {
        if v[i] == 0 {
            continue;
        }
        let (g, s, t) = ext_gcd(v[i - 1], v[i]);
        let (a, b) = (v[i - 1], v[i]);
        let row_prev = u[i - 1].clone();
        let row_cur = u[i].clone();
        for j in 0..n {
            u[i - 1][j] = s * row_prev[j] + t * row_cur[j];
            u[i][j] = -(b / g) * row_prev[j] + (a / g) * row_cur[j];
        }
        v[i - 1] = g;
        v[i] = 0;
    }
    if v[0] < 0 {
        for x in u[0].iter_mut() {
            *x = -*x;
        }
        v[0] = -v[0];
    }
    debug_assert_eq!(v[0], 1);
    let rows = u.split_off(1);
    Grading::new(n, rows, vec![0; n - 1])
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// P_a(M): the componentwise sum over {u ∈ ℕⁿ : x^u ∉ M, deg(u) = a}.
///
/// For A = 0 (trivial grading) the single fiber is the whole staircase and M
/// must be artinian; otherwise the grading must be positive so the fiber is
/// finite.
pub fn p_vector(m: &MonomialIdeal, g: &Grading, a: &[i64]) -> Result<Vec<u64>> {
    if g.rank() == 0 {
        let mut sum = vec![0u64; m.nvars()];
        for u in m.standard_monomials()? {
            for (s, e) in sum.iter_mut().zip(u.exponents()) {
                *s += *e as u64;
            }
        }
        return Ok(sum);
    }
    let cert = g.positive_certificate().ok_or(Error::InfiniteFiber)?;
    let weights = certified_weights(g, &cert);
    let target: i64 = a.iter().zip(&cert).map(|(ai, l)| ai * l).sum();
    let mut sum = vec![0u64; m.nvars()];
    if target < 0 {
        return Ok(sum);
    }
    for u in fiber_box(&weights, target) {
        let mono = Monomial::new(u.iter().map(|&x| x as u32).collect());
        if g.degree(&mono) == a && !m.contains(&mono)? {
            for (s, e) in sum.iter_mut().zip(&u) {
                *s += *e as u64;
            }
        }
    }
    Ok(sum)
}

fn certified_weights(g: &Grading, cert: &[i64]) -> Vec<i64> {
    (0..g.nvars())
        .map(|j| {
            g.matrix()
                .iter()
                .zip(cert)
                .map(|(row, &l)| row[j] * l)
                .sum()
        })
        .collect()
}

/// All u ∈ ℕⁿ with Σ weights_j·u_j ≤ target (weights all ≥ 1).
fn fiber_box(weights: &[i64], target: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let n = weights.len();
    let mut v = vec![0i64; n];
    if n == 0 {
        return vec![v];
    }
    loop {
        let w: i64 = weights.iter().zip(&v).map(|(a, b)| a * b).sum();
        if w <= target {
            out.push(v.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            v[i] += 1;
            if weights[i] * v[i] <= target {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Degrees realized by monomials of ℓ-weight up to the bound, enumerated by
/// increasing weight with lexicographic tie-break.
fn degrees_up_to(g: &Grading, cert: &[i64], max_weight: i64) -> Vec<Vec<i64>> {
    let weights = certified_weights(g, cert);
    let mut degrees: Vec<(i64, Vec<i64>)> = Vec::new();
    for u in fiber_box(&weights, max_weight) {
        let mono = Monomial::new(u.iter().map(|&x| x as u32).collect());
        let d = g.degree(&mono);
        let w: i64 = d.iter().zip(cert).map(|(a, l)| a * l).sum();
        degrees.push((w, d));
    }
    degrees.sort();
    degrees.dedup();
    degrees.into_iter().map(|(_, d)| d).collect()
}

/// Pick the first degree where M₁ and M₂ differ and compare P-vectors: equal
/// P-vectors stop the algorithm (None); otherwise the primitive vector in
/// direction P_a(M₁) − P_a(M₂) is the unique edge-direction candidate.
pub fn direction_by_pvector(
    m1: &MonomialIdeal,
    m2: &MonomialIdeal,
    g: &Grading,
) -> Result<Option<Direction>> {
    if m1 == m2 {
        return Err(Error::Precondition(
            "ideals must differ in some degree".into(),
        ));
    }
    let (p1, p2) = if g.rank() == 0 {
        (p_vector(m1, g, &[])?, p_vector(m2, g, &[])?)
    } else {
        let cert = g.positive_certificate().ok_or(Error::InfiniteFiber)?;
        // A differing degree is witnessed by a minimal generator of one ideal
        // that is not in the other, so their weights bound the search.
        let max_weight = m1
            .generators()
            .iter()
            .chain(m2.generators())
            .map(|u| {
                g.degree(u)
                    .iter()
                    .zip(&cert)
                    .map(|(a, l)| a * l)
                    .sum::<i64>()
            })
            .max()
            .unwrap_or(0);
        let mut found = None;
        for a in degrees_up_to(g, &cert, max_weight) {
            if fiber_differs(m1, m2, g, &cert, &a)? {
                found = Some(a);
                break;
            }
        }
        let a =
            found.ok_or_else(|| Error::Precondition("ideals must differ in some degree".into()))?;
        (p_vector(m1, g, &a)?, p_vector(m2, g, &a)?)
    };
    let diff: Vec<i64> = p1
        .iter()
        .zip(&p2)
        .map(|(a, b)| *a as i64 - *b as i64)
        .collect();
    if diff.iter().all(|&d| d == 0) {
        return Ok(None);
    }
    Ok(Some(Direction::primitive(&diff)?))
}

fn fiber_differs(
    m1: &MonomialIdeal,
    m2: &MonomialIdeal,
    g: &Grading,
    cert: &[i64],
    a: &[i64],
) -> Result<bool> {
    let weights = certified_weights(g, cert);
    let target: i64 = a.iter().zip(cert).map(|(ai, l)| ai * l).sum();
    for u in fiber_box(&weights, target) {
        let mono = Monomial::new(u.iter().map(|&x| x as u32).collect());
        if g.degree(&mono) == a && m1.contains(&mono)? != m2.contains(&mono)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Search for the unique primitive mixed-sign c (up to sign) such that
/// x^{c⁺} − x^{c⁻} divides K₁ − K₂, with |c_i| bounded by the Newton box of
/// the numerators. Returns the representative whose first nonzero entry is
/// positive; None when no candidate or several exist, and None for M₁ = M₂
/// (zero is divisible by everything, so uniqueness fails).
pub fn binomial_direction(m1: &MonomialIdeal, m2: &MonomialIdeal) -> Result<Option<Direction>> {
    if m1.nvars() != m2.nvars() {
        return Err(Error::DimensionMismatch {
            expected: m1.nvars(),
            found: m2.nvars(),
        });
    }
    let k1 = hilbert_numerator(m1);
    let k2 = hilbert_numerator(m2);
    let diff = k1.sub(&k2);
    if diff.is_zero() {
        return Ok(None);
    }
    let n = m1.nvars();
    let box1 = k1.max_exponents();
    let box2 = k2.max_exponents();
    let bounds: Vec<i64> = box1
        .iter()
        .zip(&box2)
        .map(|(a, b)| *a.max(b) as i64)
        .collect();
    let mut hits: Vec<Direction> = Vec::new();
    let mut v: Vec<i64> = bounds.iter().map(|b| -b).collect();
    if n == 0 {
        return Ok(None);
    }
    loop {
        if let Some(c) = check_candidate(&v, &diff) {
            if !hits.contains(&c) {
                hits.push(c);
            }
        }
        let mut i = n;
        let mut done = false;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            v[i] += 1;
            if v[i] <= bounds[i] {
                break;
            }
            v[i] = -bounds[i];
        }
        if done {
            break;
        }
    }
    if hits.len() == 1 {
        Ok(Some(hits.pop().unwrap()))
    } else {
        Ok(None)
    }
}

fn check_candidate(v: &[i64], diff: &IntPoly) -> Option<Direction> {
    // canonical representative only: first nonzero entry positive
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x > 0 => {}
        _ => return None,
    }
    let c = Direction::new(v.to_vec()).ok()?;
    if !c.has_mixed_signs() || !c.is_primitive() {
        return None;
    }
    if diff.divisible_by_binomial(&c.positive_part(), &c.negative_part()) {
        Some(c)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::var_names;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        let n = gens[0].len();
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    #[test]
    fn numerators_match_known_values() {
        let names = var_names(2);
        let m1 = ideal(&[&[6, 0], &[2, 1], &[0, 2]]);
        let k1 = hilbert_numerator(&m1);
        assert_eq!(k1.format(&names), "x^6*y - x^6 + x^2*y^2 - x^2*y - y^2 + 1");
        let m2 = ideal(&[&[2, 0], &[1, 2], &[0, 6]]);
        let k2 = hilbert_numerator(&m2);
        assert_eq!(k2.format(&names), "x*y^6 - y^6 + x^2*y^2 - x*y^2 - x^2 + 1");
        assert_eq!(hilbert_numerator(&MonomialIdeal::zero(2)), IntPoly::one(2));
        assert!(hilbert_numerator(&MonomialIdeal::unit(2)).is_zero());
    }

    #[test]
    fn numerator_is_pivot_independent() {
        for gens in [
            vec![vec![6u32, 0], vec![2, 1], vec![0, 2]],
            vec![vec![2, 0], vec![1, 2], vec![0, 6]],
            vec![vec![3, 0, 0], vec![0, 2, 1], vec![1, 1, 1]],
        ] {
            let n = gens[0].len();
            let i = MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.clone())).collect())
                .unwrap();
            assert_eq!(
                hilbert_numerator_with_pivot(&i, Pivot::Last),
                hilbert_numerator_with_pivot(&i, Pivot::First)
            );
        }
    }

    #[test]
    fn numerator_series_matches_staircase() {
        // Summing K over the lattice points below u reproduces the indicator
        // of standard monomials.
        let i = ideal(&[&[4, 0], &[1, 1], &[0, 3]]);
        let k = hilbert_numerator(&i);
        for ux in 0..6u32 {
            for uy in 0..6u32 {
                let mut total = BigInt::zero();
                for (mono, c) in k.terms() {
                    if mono.exponent(0) <= ux && mono.exponent(1) <= uy {
                        total += c;
                    }
                }
                let standard = !i.contains(&m(&[ux, uy])).unwrap();
                assert_eq!(total, BigInt::from(standard as i64));
            }
        }
    }

    #[test]
    fn positivity() {
        assert!(Grading::total_degree(3).is_positive());
        let supergrading = Grading::new(2, vec![vec![1, 1]], vec![2]).unwrap();
        assert!(!supergrading.is_positive());
        let mixed = Grading::new(2, vec![vec![1, -1]], vec![0]).unwrap();
        assert!(!mixed.is_positive());
        let identity = Grading::new(2, vec![vec![1, 0], vec![0, 1]], vec![0, 0]).unwrap();
        assert!(identity.is_positive());
    }

    #[test]
    fn hilbert_equality_under_gradings() {
        let m1 = ideal(&[&[4, 0], &[0, 1]]);
        let m2 = ideal(&[&[2, 0], &[0, 2]]);
        let supergrading = Grading::new(2, vec![vec![1, 1]], vec![2]).unwrap();
        assert!(hilbert_equal_under_grading(&m1, &m2, &supergrading));
        assert!(hilbert_equal_under_grading(&m1, &m1, &supergrading));
        let identity = Grading::new(2, vec![vec![1, 0], vec![0, 1]], vec![0, 0]).unwrap();
        assert!(!hilbert_equal_under_grading(&m1, &m2, &identity));
    }

    #[test]
    fn brute_force_degree_counts_agree_with_numerator_test() {
        // Independent oracle for the supergrading example: count standard
        // monomials per residue class directly.
        let m1 = ideal(&[&[4, 0], &[0, 1]]);
        let m2 = ideal(&[&[2, 0], &[0, 2]]);
        let mut counts1 = [0usize; 2];
        let mut counts2 = [0usize; 2];
        for u in m1.standard_monomials().unwrap() {
            counts1[(u.total_degree() % 2) as usize] += 1;
        }
        for u in m2.standard_monomials().unwrap() {
            counts2[(u.total_degree() % 2) as usize] += 1;
        }
        assert_eq!(counts1, counts2);
        assert_eq!(counts1, [2, 2]);
    }

    #[test]
    fn quotient_gradings() {
        let c = Direction::new(vec![1, -1]).unwrap();
        let g = quotient_grading(&c).unwrap();
        assert_eq!(g.matrix(), &[vec![1, 1]]);
        assert_eq!(g.degree_of_vec(c.entries()), vec![0]);

        let c2 = Direction::new(vec![2, -1]).unwrap();
        let g2 = quotient_grading(&c2).unwrap();
        assert_eq!(g2.matrix(), &[vec![1, 2]]);
        assert_eq!(g2.degree_of_vec(c2.entries()), vec![0]);

        let e1 = Direction::new(vec![1, 0]).unwrap();
        let g3 = quotient_grading(&e1).unwrap();
        assert_eq!(g3.degree_of_vec(e1.entries()), vec![0]);

        assert!(quotient_grading(&Direction::new(vec![2, -2]).unwrap()).is_err());
    }

    #[test]
    fn quotient_grading_is_a_basis_completion() {
        // The grading rows together with a Bezout row for c form a unimodular
        // matrix; checked here via the kernel property on a 3d example.
        let c = Direction::new(vec![-3, 0, 1]).unwrap();
        let g = quotient_grading(&c).unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.degree_of_vec(c.entries()), vec![0, 0]);
        // the grading must separate anything not proportional to c
        for v in [[1i64, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]] {
            assert_ne!(g.degree_of_vec(&v), vec![0, 0], "v = {:?}", v);
        }
        assert_eq!(g.degree_of_vec(&[-6, 0, 2]), vec![0, 0]);
    }

    #[test]
    fn p_vectors_for_trivial_grading() {
        let g = Grading::trivial(2);
        assert_eq!(
            p_vector(&ideal(&[&[4, 0], &[0, 1]]), &g, &[]).unwrap(),
            vec![6, 0]
        );
        assert_eq!(
            p_vector(&ideal(&[&[2, 0], &[0, 2]]), &g, &[]).unwrap(),
            vec![2, 2]
        );
        assert_eq!(
            p_vector(&ideal(&[&[1, 0], &[0, 1]]), &g, &[]).unwrap(),
            vec![0, 0]
        );
        assert!(p_vector(&ideal(&[&[1, 1]]), &g, &[]).is_err());
    }

    #[test]
    fn p_vector_under_total_degree() {
        // Fiber of degree 2 under total degree for <x^4, y>: only x^2.
        let g = Grading::total_degree(2);
        let m1 = ideal(&[&[4, 0], &[0, 1]]);
        assert_eq!(p_vector(&m1, &g, &[2]).unwrap(), vec![2, 0]);
        let m2 = ideal(&[&[2, 0], &[0, 2]]);
        assert_eq!(p_vector(&m2, &g, &[2]).unwrap(), vec![1, 1]);
    }

    #[test]
    fn pvector_direction() {
        let g = Grading::trivial(2);
        let m1 = ideal(&[&[4, 0], &[0, 1]]);
        let m2 = ideal(&[&[2, 0], &[0, 2]]);
        let c = direction_by_pvector(&m1, &m2, &g).unwrap().unwrap();
        assert_eq!(c.entries(), &[2, -1]);
        assert!(direction_by_pvector(&m1, &m1, &g).is_err());
    }

    #[test]
    fn pvector_direction_under_a_positive_grading() {
        // <x^2, y^2> and <x^3, xy, y^2> share the total-degree Hilbert
        // function 1, 2, 1; the first differing fiber is degree 2 and gives
        // the same direction as the ungraded computation.
        let m1 = ideal(&[&[2, 0], &[0, 2]]);
        let m2 = ideal(&[&[3, 0], &[1, 1], &[0, 2]]);
        let graded = direction_by_pvector(&m1, &m2, &Grading::total_degree(2))
            .unwrap()
            .unwrap();
        let ungraded = direction_by_pvector(&m1, &m2, &Grading::trivial(2))
            .unwrap()
            .unwrap();
        assert_eq!(graded.entries(), &[-1, 1]);
        assert_eq!(graded.entries(), ungraded.entries());
    }

    #[test]
    fn torsion_gradings_have_infinite_fibers() {
        let supergrading = Grading::new(2, vec![vec![1, 1]], vec![2]).unwrap();
        let m1 = ideal(&[&[4, 0], &[0, 1]]);
        assert_eq!(
            p_vector(&m1, &supergrading, &[0]),
            Err(Error::InfiniteFiber)
        );
    }

    #[test]
    fn binomial_directions() {
        let m1 = ideal(&[&[6, 0], &[2, 1], &[0, 2]]);
        let m2 = ideal(&[&[2, 0], &[1, 2], &[0, 6]]);
        let c = binomial_direction(&m1, &m2).unwrap().unwrap();
        assert_eq!(c.entries(), &[1, -1]);

        assert_eq!(binomial_direction(&m1, &m1).unwrap(), None);

        let a = ideal(&[&[4, 0], &[0, 1]]);
        let b = ideal(&[&[2, 0], &[0, 2]]);
        let c2 = binomial_direction(&a, &b).unwrap().unwrap();
        assert_eq!(c2.entries(), &[2, -1]);
    }

    #[test]
    fn binomial_difference_factors_as_expected() {
        // K(<x^4,y>) - K(<x^2,y^2>) = (x^2 - y)(1 - x^2)(1 - y), multiplied
        // out here as an independent check of the numerator difference.
        let a = ideal(&[&[4, 0], &[0, 1]]);
        let b = ideal(&[&[2, 0], &[0, 2]]);
        let diff = hilbert_numerator(&a).sub(&hilbert_numerator(&b));
        let f1 = IntPoly::from_terms(
            2,
            vec![
                (m(&[2, 0]), BigInt::from(1)),
                (m(&[0, 1]), BigInt::from(-1)),
            ],
        );
        let f2 = IntPoly::from_terms(
            2,
            vec![
                (m(&[0, 0]), BigInt::from(1)),
                (m(&[2, 0]), BigInt::from(-1)),
            ],
        );
        let f3 = IntPoly::from_terms(
            2,
            vec![
                (m(&[0, 0]), BigInt::from(1)),
                (m(&[0, 1]), BigInt::from(-1)),
            ],
        );
        assert_eq!(diff, f1.mul(&f2).mul(&f3));
    }

    #[test]
    fn running_pair_direction_uniqueness_under_gradings() {
        // For the running pair of ideals, Hilbert functions agree under the
        // quotient grading of c' iff c' = ±(1,-1), over the |c'| ≤ 6 box.
        let m1 = ideal(&[&[6, 0], &[2, 1], &[0, 2]]);
        let m2 = ideal(&[&[2, 0], &[1, 2], &[0, 6]]);
        for s in -6i64..=6 {
            for t in -6i64..=6 {
                let mixed = (s > 0 && t < 0) || (s < 0 && t > 0);
                if !mixed {
                    continue;
                }
                let c = Direction::new(vec![s, t]).unwrap();
                if !c.is_primitive() {
                    continue;
                }
                let g = quotient_grading(&c).unwrap();
                let equal = hilbert_equal_under_grading(&m1, &m2, &g);
                let expected = (s, t) == (1, -1) || (s, t) == (-1, 1);
                assert_eq!(equal, expected, "c' = ({}, {})", s, t);
            }
        }
    }
}
