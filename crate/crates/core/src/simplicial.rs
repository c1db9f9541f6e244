//! Square-free monomial ideals as simplicial complexes: Stanley–Reisner
//! translation, the face sets N_c and Ñ_c, Hom-component counting, neighbor
//! ideals in a direction c, and generalized bistellar flips.
//!
//! Faces are bitmasks over the vertex set {1..n}; vertex i occupies bit i−1.
//! Complexes are stored by their facets. The void complex (no faces at all)
//! and the complex {∅} are distinct: the former has Stanley–Reisner ideal
//! ⟨1⟩, the latter ⟨x₁,…,x_n⟩.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Direction, Monomial};

pub type Face = u32;

/// Largest vertex count accepted by the face-enumerating operations.
pub const MAX_VERTICES: usize = 16;

/// Vertices of a face, 1-based.
pub fn face_vertices(f: Face) -> Vec<usize> {
    (0..32)
        .filter(|i| f & (1 << i) != 0)
        .map(|i| i + 1)
        .collect()
}

/// Build a face from 1-based vertex labels.
pub fn face_from_vertices(vertices: &[usize]) -> Face {
    vertices.iter().fold(0, |acc, &v| acc | (1 << (v - 1)))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Build from any set of faces; keeps the maximal ones.
    pub fn from_faces(n: usize, faces: Vec<Face>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::BudgetExceeded(format!(
                "{} vertices exceed the supported maximum {}",
                n, MAX_VERTICES
            )));
        }
        let mask = if n == 32 { !0 } else { (1u32 << n) - 1 };
        for &f in &faces {
            if f & !mask != 0 {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: 32 - (f.leading_zeros() as usize),
                });
            }
        }
        let set: BTreeSet<Face> = faces.into_iter().collect();
        let mut facets: Vec<Face> = set
            .iter()
            .filter(|&&f| !set.iter().any(|&g| g != f && f & !g == 0))
            .copied()
            .collect();
        facets.sort_unstable();
        Ok(SimplicialComplex { n, facets })
    }

    /// The void complex: no faces, not even ∅.
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![] }
    }

    /// The full simplex on 1..n.
    pub fn simplex(n: usize) -> Self {
        let mask = if n == 0 { 0 } else { (1u32 << n) - 1 };
        SimplicialComplex {
            n,
            facets: vec![mask],
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, f: Face) -> bool {
        self.facets.iter().any(|&g| f & !g == 0)
    }

    /// Every face, as the downward closure of the facets.
    pub fn faces(&self) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        for &facet in &self.facets {
            let mut s = facet;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & facet;
            }
        }
        out
    }

    /// The nonempty faces.
    pub fn nonempty_faces(&self) -> Vec<Face> {
        self.faces().into_iter().filter(|&f| f != 0).collect()
    }
}

/// The Stanley–Reisner ideal M_X = ⟨x^u : u a minimal non-face of X⟩.
pub fn stanley_reisner(x: &SimplicialComplex) -> MonomialIdeal {
    let n = x.nvars();
    let total = 1u32 << n;
    let mut gens = Vec::new();
    for mask in 0..total {
        if x.is_face(mask) {
            continue;
        }
        let minimal = (0..n).all(|i| {
            let bit = 1u32 << i;
            mask & bit == 0 || x.is_face(mask & !bit)
        });
        if minimal {
            let exps: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
            gens.push(Monomial::new(exps));
        }
    }
    MonomialIdeal::new(n, gens).expect("dimension fixed")
}

/// The complex whose Stanley–Reisner ideal is the given square-free ideal:
/// faces are the square-free monomials outside the ideal.
pub fn complex_of_squarefree_ideal(m: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !m.is_squarefree() {
        return Err(Error::Precondition("ideal is not square-free".into()));
    }
    let n = m.nvars();
    if n > MAX_VERTICES {
        return Err(Error::BudgetExceeded("too many vertices".into()));
    }
    let total = 1u32 << n;
    let mut faces = Vec::new();
    for mask in 0..total {
        let exps: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
        if !m.contains(&Monomial::new(exps))? {
            faces.push(mask);
        }
    }
    SimplicialComplex::from_faces(n, faces)
}

/// The face data controlling degree-c deformations: N_c, Ñ_c and the
/// connected components of ⟨N_c⟩ that stay clear of Ñ_c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipData {
    pub a: Face,
    pub b: Face,
    pub n_c: Vec<Face>,
    pub n_tilde: Vec<Face>,
    /// N¹, …, N^m: the components not touching Ñ_c, each sorted.
    pub components: Vec<Vec<Face>>,
}

/// N_c = {f ∈ X : a ⊆ f, f ∩ b = ∅, f ∪ b ∉ X} and
/// Ñ_c = {f ∈ N_c : f ∪ b′ ∉ X for some proper subset b′ ⊊ b}.
///
/// Connectivity of ⟨N_c⟩ is read off the face-containment graph on N_c
/// (edges between comparable faces); a component "touches" Ñ_c when it
/// contains a member of Ñ_c.
pub fn compute_nc(x: &SimplicialComplex, a: Face, b: Face) -> Result<FlipData> {
    if a == 0 || b == 0 {
        return Err(Error::Precondition("a and b must be nonempty".into()));
    }
    if a & b != 0 {
        return Err(Error::OverlappingSupports);
    }
    let n_c: Vec<Face> = x
        .faces()
        .into_iter()
        .filter(|&f| a & !f == 0 && f & b == 0 && !x.is_face(f | b))
        .collect();
    let n_tilde: Vec<Face> = n_c
        .iter()
        .copied()
        .filter(|&f| {
            // proper subsets b' of b: the empty set never triggers since f ∈ X
            let mut s = b;
            loop {
                s = (s - 1) & b;
                if s == 0 {
                    return false;
                }
                if !x.is_face(f | s) {
                    return true;
                }
            }
        })
        .collect();
    // components of the containment graph
    let mut component_id: Vec<usize> = (0..n_c.len()).collect();
    loop {
        let mut changed = false;
        for i in 0..n_c.len() {
            for j in 0..n_c.len() {
                let comparable = n_c[i] & !n_c[j] == 0 || n_c[j] & !n_c[i] == 0;
                if comparable && component_id[i] != component_id[j] {
                    let target = component_id[i].min(component_id[j]);
                    let from = component_id[i].max(component_id[j]);
                    for id in component_id.iter_mut() {
                        if *id == from {
                            *id = target;
                        }
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let ids: BTreeSet<usize> = component_id.iter().copied().collect();
    let mut components = Vec::new();
    for id in ids {
        let members: Vec<Face> = n_c
            .iter()
            .zip(&component_id)
            .filter(|(_, &cid)| cid == id)
            .map(|(&f, _)| f)
            .collect();
        let touches = members.iter().any(|f| n_tilde.contains(f));
        if !touches {
            components.push(members);
        }
    }
    components.sort();
    Ok(FlipData {
        a,
        b,
        n_c,
        n_tilde,
        components,
    })
}

/// χ_a − χ_b as a direction vector.
pub fn direction_of_supports(n: usize, a: Face, b: Face) -> Direction {
    let entries: Vec<i64> = (0..n)
        .map(|i| {
            let bit = 1u32 << i;
            if a & bit != 0 {
                1
            } else if b & bit != 0 {
                -1
            } else {
                0
            }
        })
        .collect();
    Direction::new(entries).expect("a nonempty")
}

/// dim Hom(M_X, A_X)_c: zero when some c_i ≤ −2 or supp(c⁺) is not a face,
/// otherwise the number m of admissible components of ⟨N_c⟩.
pub fn hom_dimension(x: &SimplicialComplex, c: &Direction) -> Result<usize> {
    if !c.has_mixed_signs() {
        return Err(Error::NotMixedSign);
    }
    if c.entries().iter().any(|&ci| ci <= -2) {
        return Ok(0);
    }
    let a = support_mask(&c.positive_part());
    let b = support_mask(&c.negative_part());
    if !x.is_face(a) {
        return Ok(0);
    }
    Ok(compute_nc(x, a, b)?.components.len())
}

fn support_mask(m: &Monomial) -> Face {
    m.support().iter().fold(0, |acc, &i| acc | (1 << i))
}

/// The monomial c-neighbor M′_X(S) for a nonempty selection S of component
/// indices (0-based): x^u for non-faces u whose transported face
/// (u∪a)\b misses the selected components, together with x^{v+c} for those
/// that hit them. The result may be non-square-free.
pub fn neighbor_ideal(
    x: &SimplicialComplex,
    c: &Direction,
    selection: &[usize],
) -> Result<MonomialIdeal> {
    let n = x.nvars();
    if c.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c.nvars(),
        });
    }
    if c.entries().iter().any(|&ci| ci <= -2) {
        return Err(Error::Precondition("Hom vanishes: some c_i ≤ -2".into()));
    }
    let a = support_mask(&c.positive_part());
    let b = support_mask(&c.negative_part());
    let data = compute_nc(x, a, b)?;
    if selection.is_empty() || selection.iter().any(|&s| s >= data.components.len()) {
        return Err(Error::Precondition(
            "selection must pick existing components".into(),
        ));
    }
    let selected: BTreeSet<Face> = selection
        .iter()
        .flat_map(|&s| data.components[s].iter().copied())
        .collect();
    let faces = x.faces();
    let total = 1u32 << n;
    let mut gens = Vec::new();
    for u in 0..total {
        if faces.contains(&u) {
            continue;
        }
        let transported = (u | a) & !b;
        if selected.contains(&transported) {
            // type two: x^{v+c}
            let exps: Vec<i64> = (0..n)
                .map(|i| ((u >> i) & 1) as i64 + c.entries()[i])
                .collect();
            if exps.iter().any(|&e| e < 0) {
                return Err(Error::Precondition(
                    "shifted generator leaves the orthant".into(),
                ));
            }
            gens.push(Monomial::new(exps.iter().map(|&e| e as u32).collect()));
        } else {
            let exps: Vec<u32> = (0..n).map(|i| (u >> i) & 1).collect();
            gens.push(Monomial::new(exps));
        }
    }
    MonomialIdeal::new(n, gens)
}

/// F = {f∖a : f in the selected components}.
pub fn f_set(data: &FlipData, selection: &[usize]) -> Vec<Face> {
    let mut out: Vec<Face> = selection
        .iter()
        .flat_map(|&s| data.components[s].iter().map(|&f| f & !data.a))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The square-free criterion: X ∩ (F ∗ {b}) = ∅.
pub fn is_squarefree_flip(x: &SimplicialComplex, _a: Face, b: Face, f_set: &[Face]) -> bool {
    f_set.iter().all(|&f| !x.is_face(f | b))
}

/// Join of face sets on disjoint vertex supports: elementwise unions.
pub fn join(y: &[Face], z: &[Face]) -> Result<Vec<Face>> {
    let support_y = y.iter().fold(0u32, |acc, &f| acc | f);
    let support_z = z.iter().fold(0u32, |acc, &f| acc | f);
    if support_y & support_z != 0 {
        return Err(Error::OverlappingSupports);
    }
    let mut out: Vec<Face> = y
        .iter()
        .flat_map(|&f| z.iter().map(move |&g| f | g))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// All subsets of a (the full simplex κa).
pub fn kappa(a: Face) -> Vec<Face> {
    let mut out = Vec::new();
    let mut s = a;
    loop {
        out.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & a;
    }
    out.sort_unstable();
    out
}

/// The proper subsets of a (the boundary ∂(κa)).
pub fn kappa_boundary(a: Face) -> Vec<Face> {
    kappa(a).into_iter().filter(|&f| f != a).collect()
}

/// The generalized bistellar flip
/// X′ = (X ∖ (κa∗F∗∂(κb))) ∪ (∂(κa)∗F∗κb).
///
/// Errors with the witness face when the square-free criterion fails.
pub fn flip(
    x: &SimplicialComplex,
    a: Face,
    b: Face,
    selection: &[usize],
) -> Result<SimplicialComplex> {
    let data = compute_nc(x, a, b)?;
    if selection.is_empty() || selection.iter().any(|&s| s >= data.components.len()) {
        return Err(Error::Precondition(
            "selection must pick existing components".into(),
        ));
    }
    let f = f_set(&data, selection);
    if let Some(&witness) = f.iter().find(|&&ff| x.is_face(ff | b)) {
        let verts: Vec<String> = face_vertices(witness | b)
            .iter()
            .map(|v| v.to_string())
            .collect();
        return Err(Error::NotSquareFree(format!("{{{}}}", verts.join(","))));
    }
    let removal = join(&join(&kappa(a), &f)?, &kappa_boundary(b))?;
    let addition = join(&join(&kappa_boundary(a), &f)?, &kappa(b))?;
    let mut faces = x.faces();
    for r in &removal {
        faces.remove(r);
    }
    faces.extend(addition.iter().copied());
    // the proof's Step-2 removal set {a}∗F∗∂(κb) leads to the same complex
    debug_assert_eq!(
        {
            let removal2 = join(&join(&[a], &f).unwrap(), &kappa_boundary(b)).unwrap();
            let mut faces2 = x.faces();
            for r in &removal2 {
                faces2.remove(r);
            }
            faces2.extend(addition.iter().copied());
            faces2
        },
        faces
    );
    // the flip construction always yields a complex; verify closure
    for &face in &faces {
        for i in 0..x.nvars() {
            let bit = 1u32 << i;
            if face & bit != 0 {
                assert!(
                    faces.contains(&(face & !bit)),
                    "flip output is not closed under subsets"
                );
            }
        }
    }
    SimplicialComplex::from_faces(x.nvars(), faces.into_iter().collect())
}

/// A flip move discovered by the neighbor enumeration.
#[derive(Clone, Debug)]
pub struct FlipNeighbor {
    pub direction: Direction,
    pub a: Face,
    pub b: Face,
    pub selection: Vec<usize>,
    pub complex: SimplicialComplex,
}

/// Enumerate every square-free flip neighbor of X: a runs over nonempty
/// faces, b over nonempty subsets of the complement, S over nonempty
/// component selections passing the square-free test. Neighbors are
/// deduplicated by the resulting complex.
pub fn all_flip_neighbors(x: &SimplicialComplex) -> Result<Vec<FlipNeighbor>> {
    let n = x.nvars();
    if n > MAX_VERTICES {
        return Err(Error::BudgetExceeded("too many vertices".into()));
    }
    let full: Face = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut out: Vec<FlipNeighbor> = Vec::new();
    let mut seen: BTreeSet<SimplicialComplex> = BTreeSet::new();
    for a in x.nonempty_faces() {
        let complement = full & !a;
        if complement == 0 {
            continue;
        }
        let mut b = complement;
        loop {
            if b != 0 {
                let data = compute_nc(x, a, b)?;
                let m = data.components.len();
                if m > 0 {
                    for sel_mask in 1u32..(1 << m) {
                        let selection: Vec<usize> =
                            (0..m).filter(|i| sel_mask & (1 << i) != 0).collect();
                        let f = f_set(&data, &selection);
                        if !is_squarefree_flip(x, a, b, &f) {
                            continue;
                        }
                        let neighbor = flip(x, a, b, &selection)?;
                        if seen.insert(neighbor.clone()) {
                            out.push(FlipNeighbor {
                                direction: direction_of_supports(n, a, b),
                                a,
                                b,
                                selection,
                                complex: neighbor,
                            });
                        }
                    }
                }
            }
            if b == 0 {
                break;
            }
            b = (b - 1) & complement;
        }
    }
    Ok(out)
}
