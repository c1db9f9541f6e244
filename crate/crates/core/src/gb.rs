//! Polynomial division, Buchberger's algorithm and reduced Gröbner bases.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;

/// Fully reduce f against G: no term of the remainder is divisible by any
/// leading monomial of G, and f − remainder lies in ⟨G⟩.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &TermOrder, k: &Field) -> Polynomial {
    let leads: Vec<(usize, Monomial, crate::field::Coeff)> = basis
        .iter()
        .enumerate()
        .filter_map(|(i, g)| g.leading_term(ord).map(|(m, c)| (i, m.clone(), c.clone())))
        .collect();
    let mut rem = f.clone();
    loop {
        // the order-largest reducible term
        let target = rem
            .terms()
            .filter(|(m, _)| leads.iter().any(|(_, lm, _)| lm.divides(m)))
            .max_by(|(a, _), (b, _)| ord.cmp(a, b))
            .map(|(m, c)| (m.clone(), c.clone()));
        let (m, c) = match target {
            Some(t) => t,
            None => return rem,
        };
        let (idx, lm, lc) = leads
            .iter()
            .find(|(_, lm, _)| lm.divides(&m))
            .expect("reducible term has a reducer");
        let factor = k.div(&c, lc);
        let shift = m.checked_div(lm).expect("divisibility checked");
        rem = rem.sub(&basis[*idx].mul_term(&shift, &factor, k), k);
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder, k: &Field) -> Polynomial {
    let (fm, fc) = f.leading_term(ord).expect("nonzero");
    let (gm, gc) = g.leading_term(ord).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.checked_div(fm).unwrap(), &k.inv(fc), k);
    let b = g.mul_term(&l.checked_div(gm).unwrap(), &k.inv(gc), k);
    a.sub(&b, k)
}

/// The unique reduced Gröbner basis of ⟨F⟩ with respect to `ord`:
/// monic generators, no term of any generator divisible by another's lead.
///
/// Pairs are processed in normal strategy (smallest lcm first) and pairs with
/// coprime leading monomials are skipped (Buchberger's first criterion).
pub fn buchberger(gens: &[Polynomial], ord: &TermOrder, k: &Field) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|f| !f.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm of leading monomials first
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, (i1, j1)), (_, (i2, j2))| {
                let l1 = lead(&basis[*i1], ord).lcm(lead(&basis[*j1], ord));
                let l2 = lead(&basis[*i2], ord).lcm(lead(&basis[*j2], ord));
                ord.cmp(&l1, &l2)
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        if lead(&basis[i], ord).coprime(lead(&basis[j], ord)) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord, k);
        let r = normal_form(&s, &basis, ord, k);
        if !r.is_zero() {
            for idx in 0..basis.len() {
                pairs.push((idx, basis.len()));
            }
            basis.push(r);
        }
    }
    reduce_basis(basis, ord, k)
}

fn lead<'a>(f: &'a Polynomial, ord: &TermOrder) -> &'a Monomial {
    f.leading_term(ord).expect("nonzero basis element").0
}

/// Interreduce: minimal leads, fully reduced tails, monic, sorted by lead.
fn reduce_basis(mut basis: Vec<Polynomial>, ord: &TermOrder, k: &Field) -> Vec<Polynomial> {
    basis.retain(|f| !f.is_zero());
    // minimalize leading monomials
    let mut keep: Vec<Polynomial> = Vec::new();
    for i in 0..basis.len() {
        let lm = lead(&basis[i], ord);
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            j != i && {
                let gm = lead(g, ord);
                gm.divides(lm) && (gm != lm || j < i)
            }
        });
        if !redundant {
            keep.push(basis[i].clone());
        }
    }
    // tail-reduce each element against the others
    let mut reduced: Vec<Polynomial> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&keep[i], &others, ord, k);
        if !r.is_zero() {
            let lc = r.leading_term(ord).unwrap().1.clone();
            reduced.push(r.scale(&k.inv(&lc), k));
        }
    }
    reduced.sort_by(|f, g| ord.cmp(lead(g, ord), lead(f, ord)));
    reduced.dedup();
    reduced
}

/// 1 ∈ ⟨GB⟩, i.e. the reduced basis is {1}.
pub fn contains_one(gb: &[Polynomial]) -> bool {
    gb.iter().any(|f| !f.is_zero() && f.is_constant())
}

/// Equality of ideals via coincidence of reduced Gröbner bases.
pub fn ideal_equal(f: &[Polynomial], g: &[Polynomial], ord: &TermOrder, k: &Field) -> bool {
    buchberger(f, ord, k) == buchberger(g, ord, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

/// Number of standard monomials of the leading-term ideal of a reduced basis
/// in n variables.
pub fn quotient_dimension(gb: &[Polynomial], n: usize, ord: &TermOrder) -> Result<QuotientDim> {
    let leads: Vec<Monomial> = gb
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| lead(f, ord).clone())
        .collect();
    let li = MonomialIdeal::new(n, leads)?;
    match li.colength() {
        Ok(d) => Ok(QuotientDim::Finite(d)),
        Err(Error::InfiniteColength) => Ok(QuotientDim::Infinite),
        Err(e) => Err(e),
    }
}

/// The leading-term monomial ideal of ⟨F⟩ under `ord`.
pub fn leading_ideal(gens: &[Polynomial], ord: &TermOrder, k: &Field) -> Result<MonomialIdeal> {
    let gb = buchberger(gens, ord, k);
    let n = gens.first().map(|f| f.nvars()).unwrap_or(0);
    let leads = gb.iter().map(|f| lead(f, ord).clone()).collect();
    MonomialIdeal::new(n, leads)
}

/// Generators of in_w(I): compute a Gröbner basis under w refined by
/// `tiebreak` and take the w-maximal homogeneous part of each element.
pub fn initial_w_ideal(
    gens: &[Polynomial],
    w: &[i64],
    tiebreak: &TermOrder,
    k: &Field,
) -> Result<Vec<Polynomial>> {
    let ord = tiebreak.refine_with(w.to_vec())?;
    let gb = buchberger(gens, &ord, k);
    Ok(gb.iter().map(|f| f.initial_form(w)).collect())
}

/// The single-box move: when each M_i/(M₁∩M₂) is one-dimensional, spanned by
/// a monomial m_i, the ideal (M₁∩M₂) + ⟨m₁ − m₂⟩ provides an edge between
/// M₁ and M₂. Returns its generators, or None when the hypothesis fails.
pub fn single_box_edge(
    m1: &MonomialIdeal,
    m2: &MonomialIdeal,
    k: &Field,
) -> Result<Option<Vec<Polynomial>>> {
    if m1 == m2 {
        return Ok(None);
    }
    let meet = m1.intersect(m2)?;
    // monomials of M_i outside the intersection = staircase members of the
    // intersection lying in M_i
    let staircase = meet.standard_monomials()?;
    let mut extra1 = Vec::new();
    let mut extra2 = Vec::new();
    for u in &staircase {
        if m1.contains(u)? {
            extra1.push(u.clone());
        }
        if m2.contains(u)? {
            extra2.push(u.clone());
        }
    }
    if extra1.len() != 1 || extra2.len() != 1 {
        return Ok(None);
    }
    let mut gens: Vec<Polynomial> = meet
        .generators()
        .iter()
        .map(|g| Polynomial::from_monomial(g.clone(), k))
        .collect();
    let binomial = Polynomial::from_terms(
        m1.nvars(),
        vec![
            (extra1[0].clone(), k.one()),
            (extra2[0].clone(), k.from_i64(-1)),
        ],
        k,
    );
    gens.push(binomial);
    Ok(Some(gens))
}

/// Exhaustive divisibility check used as the staircase oracle in tests.
pub fn brute_force_standard_count(li: &MonomialIdeal, bound: u32) -> usize {
    let n = li.nvars();
    let mut count = 0usize;
    let mut current = vec![0u32; n];
    loop {
        let m = Monomial::new(current.clone());
        if !li.contains(&m).unwrap() {
            count += 1;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            current[i] += 1;
            if current[i] <= bound {
                break;
            }
            current[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn poly(k: &Field, terms: &[(i64, &[u32])]) -> Polynomial {
        let n = terms[0].1.len();
        Polynomial::from_terms(
            n,
            terms.iter().map(|(c, e)| (m(e), k.from_i64(*c))).collect(),
            k,
        )
    }

    #[test]
    fn normal_form_examples() {
        let k = Field::Q;
        // x^4 reduced by {x^2 + mu*y, y^2} under a lead-by-x order gives 0
        // (x^4 = (x^2 - mu*y)(x^2 + mu*y) + mu^2 y^2), here with mu = 3.
        let ord = TermOrder::new(2, vec![vec![1, 0]]).unwrap();
        let f = poly(&k, &[(1, &[4, 0])]);
        let basis = vec![
            poly(&k, &[(1, &[2, 0]), (3, &[0, 1])]),
            poly(&k, &[(1, &[0, 2])]),
        ];
        assert!(normal_form(&f, &basis, &ord, &k).is_zero());

        // empty basis: identity
        let g = poly(&k, &[(2, &[1, 1]), (1, &[0, 0])]);
        assert_eq!(normal_form(&g, &[], &ord, &k), g);

        // products of basis elements reduce to zero
        let prod = basis[0].mul(&basis[1], &k);
        assert!(normal_form(&prod, &basis, &ord, &k).is_zero());
    }

    #[test]
    fn buchberger_keeps_coprime_pair_basis() {
        let k = Field::Q;
        let ord = TermOrder::grlex(2);
        let gens = vec![poly(&k, &[(1, &[2, 0])]), poly(&k, &[(1, &[0, 2])])];
        let gb = buchberger(&gens, &ord, &k);
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn buchberger_unit_ideal() {
        let k = Field::Q;
        let ord = TermOrder::grlex(1);
        let gens = vec![poly(&k, &[(1, &[1])]), poly(&k, &[(1, &[1]), (1, &[0])])];
        let gb = buchberger(&gens, &ord, &k);
        assert_eq!(gb.len(), 1);
        assert!(contains_one(&gb));
    }

    #[test]
    fn reduced_basis_is_input_order_independent() {
        let k = Field::Q;
        let ord = TermOrder::grlex(2);
        let f1 = poly(&k, &[(1, &[2, 0]), (1, &[1, 1]), (-1, &[0, 0])]);
        let f2 = poly(&k, &[(1, &[1, 1]), (2, &[0, 1])]);
        let f3 = poly(&k, &[(3, &[0, 2]), (1, &[1, 0])]);
        let a = buchberger(&[f1.clone(), f2.clone(), f3.clone()], &ord, &k);
        let b = buchberger(&[f3, f1, f2], &ord, &k);
        assert_eq!(a, b);
    }

    #[test]
    fn ideal_equality() {
        let k = Field::Q;
        let ord = TermOrder::grlex(1);
        let f = vec![poly(&k, &[(1, &[1])])];
        let g = vec![poly(&k, &[(1, &[2])])];
        assert!(!ideal_equal(&f, &g, &ord, &k));
        assert!(ideal_equal(&f, &f, &ord, &k));
    }

    #[test]
    fn quotient_dimensions() {
        let k = Field::Q;
        let ord = TermOrder::grlex(1);
        let unit = buchberger(&[poly(&k, &[(1, &[0])])], &ord, &k);
        assert_eq!(
            quotient_dimension(&unit, 1, &ord).unwrap(),
            QuotientDim::Finite(0)
        );
        // lambda^2 in one variable: basis {1, lambda}
        let sq = buchberger(&[poly(&k, &[(1, &[2])])], &ord, &k);
        assert_eq!(
            quotient_dimension(&sq, 1, &ord).unwrap(),
            QuotientDim::Finite(2)
        );
        let ord2 = TermOrder::grlex(2);
        let gb = buchberger(
            &[poly(&k, &[(1, &[2, 0])]), poly(&k, &[(1, &[0, 2])])],
            &ord2,
            &k,
        );
        assert_eq!(
            quotient_dimension(&gb, 2, &ord2).unwrap(),
            QuotientDim::Finite(4)
        );
        let line = buchberger(&[poly(&k, &[(1, &[1, 0])])], &ord2, &k);
        assert_eq!(
            quotient_dimension(&line, 2, &ord2).unwrap(),
            QuotientDim::Infinite
        );
    }

    #[test]
    fn initial_w_recovers_the_edge_providing_example() {
        // in_(1,2)( <x^4 + x^2 y + y^2 + x + y + 1> ) = <x^4 + x^2 y + y^2>
        let k = Field::Q;
        let f = poly(
            &k,
            &[
                (1, &[4, 0]),
                (1, &[2, 1]),
                (1, &[0, 2]),
                (1, &[1, 0]),
                (1, &[0, 1]),
                (1, &[0, 0]),
            ],
        );
        let init = initial_w_ideal(&[f], &[1, 2], &TermOrder::lex(2), &k).unwrap();
        let expected = vec![poly(&k, &[(1, &[4, 0]), (1, &[2, 1]), (1, &[0, 2])])];
        assert!(ideal_equal(&init, &expected, &TermOrder::grlex(2), &k));
    }

    #[test]
    fn single_box_edges() {
        let k = Field::Q;
        let i =
            |gens: &[&[u32]]| MonomialIdeal::new(2, gens.iter().map(|g| m(g)).collect()).unwrap();
        // <x^2, y> and <x, y^2>: both quotients are one-dimensional, spanned
        // by x resp. y, so the move adjoins x - y to the intersection
        let m1 = i(&[&[2, 0], &[0, 1]]);
        let m2 = i(&[&[1, 0], &[0, 2]]);
        let gens = single_box_edge(&m1, &m2, &k).unwrap().unwrap();
        let meet = m1.intersect(&m2).unwrap();
        assert_eq!(gens.len(), meet.generators().len() + 1);
        // the box of M1 is y, the box of M2 is x; the binomial spans <x - y>
        let binomial = gens.last().unwrap();
        assert_eq!(binomial.num_terms(), 2);
        assert_eq!(binomial.coefficient(&m(&[0, 1])), Some(&k.one()));
        assert_eq!(binomial.coefficient(&m(&[1, 0])), Some(&k.from_i64(-1)));

        // identical ideals: hypothesis fails
        assert_eq!(single_box_edge(&m1, &m1, &k).unwrap(), None);

        // quotients of dimension two: not a single-box move
        let a = i(&[&[4, 0], &[0, 1]]);
        let b = i(&[&[2, 0], &[0, 2]]);
        assert_eq!(single_box_edge(&a, &b, &k).unwrap(), None);
    }

    #[test]
    fn initial_in_the_negative_class_recovers_the_other_vertex() {
        // in_w(<x^2 + 3y, y^2>) with w·(2,-1) < 0 is <y, x^4>
        let k = Field::Q;
        let gens = vec![
            poly(&k, &[(1, &[2, 0]), (3, &[0, 1])]),
            poly(&k, &[(1, &[0, 2])]),
        ];
        let init = initial_w_ideal(&gens, &[0, 1], &TermOrder::lex(2), &k).unwrap();
        let expected = vec![poly(&k, &[(1, &[0, 1])]), poly(&k, &[(1, &[4, 0])])];
        assert!(ideal_equal(&init, &expected, &TermOrder::grlex(2), &k));
    }

    #[test]
    fn initial_of_monomial_ideal_is_identity() {
        let k = Field::Q;
        let gens = vec![poly(&k, &[(1, &[6, 0])]), poly(&k, &[(1, &[2, 1])])];
        let init = initial_w_ideal(&gens, &[1, 1], &TermOrder::lex(2), &k).unwrap();
        assert!(ideal_equal(&init, &gens, &TermOrder::grlex(2), &k));
    }
}
