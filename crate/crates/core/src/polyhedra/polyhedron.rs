use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::dd::cone_generators;
use crate::coeffs::Rational;
use crate::linalg::{canonical_row_basis, dot, dot_int, inverse, nullspace, primitive, rank, to_rational};

/// Rational polyhedron in `Q^n` with both descriptions in canonical form.
///
/// Rows of `equations` and `inequalities` are `[a_1, …, a_n, b]` meaning
/// `a·ω = b` and `a·ω ≤ b`, scaled to primitive integer vectors. Equations
/// are the reduced echelon basis of the affine hull's normal space;
/// inequalities are the facets with normals projected into the hull's
/// direction space. Vertices and rays are taken modulo the lineality space
/// (projected onto its orthogonal complement), rays and lineality are
/// primitive integer vectors. All lists are sorted, so structural equality
/// is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyhedron {
    ambient: usize,
    dim: Option<usize>,
    equations: Vec<Vec<BigInt>>,
    inequalities: Vec<Vec<BigInt>>,
    vertices: Vec<Vec<Rational>>,
    rays: Vec<Vec<BigInt>>,
    lineality: Vec<Vec<BigInt>>,
}

/// Orthogonal projection onto the complement of a row space.
struct Complement {
    basis: Vec<Vec<Rational>>,
    gram_inv: Vec<Vec<Rational>>,
}

impl Complement {
    fn new(basis: Vec<Vec<Rational>>) -> Self {
        let gram: Vec<Vec<Rational>> = basis
            .iter()
            .map(|a| basis.iter().map(|b| dot(a, b)).collect())
            .collect();
        let gram_inv = if basis.is_empty() {
            vec![]
        } else {
            inverse(&gram).expect("independent basis")
        };
        Complement { basis, gram_inv }
    }

    fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        if self.basis.is_empty() {
            return v.to_vec();
        }
        let c: Vec<Rational> = self.basis.iter().map(|b| dot(b, v)).collect();
        let coef: Vec<Rational> = self.gram_inv.iter().map(|row| dot(row, &c)).collect();
        let mut out = v.to_vec();
        for (k, b) in coef.iter().zip(&self.basis) {
            if k.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o -= k * x;
            }
        }
        out
    }
}

fn row_of(a: &[Rational], b: &Rational) -> Vec<BigInt> {
    let mut r = a.to_vec();
    r.push(b.clone());
    primitive(&r)
}

fn split(row: &[BigInt]) -> (&[BigInt], Rational) {
    let n = row.len() - 1;
    (&row[..n], Rational::from_integer(row[n].clone()))
}

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Polyhedron {
    pub fn empty(ambient: usize) -> Self {
        Polyhedron {
            ambient,
            dim: None,
            equations: vec![],
            inequalities: vec![],
            vertices: vec![],
            rays: vec![],
            lineality: vec![],
        }
    }

    pub fn whole_space(ambient: usize) -> Self {
        Self::from_h(ambient, &[], &[])
    }

    /// Polyhedron `{ω : a·ω = b for each equation, a·ω ≤ b for each
    /// inequality}`; redundant rows are allowed.
    pub fn from_h(
        ambient: usize,
        equations: &[(Vec<Rational>, Rational)],
        inequalities: &[(Vec<Rational>, Rational)],
    ) -> Self {
        let n = ambient;
        let mut cone_ineqs: Vec<Vec<BigInt>> = inequalities
            .iter()
            .map(|(a, b)| {
                let mut r: Vec<Rational> = a.iter().map(|x| -x).collect();
                r.push(b.clone());
                primitive(&r)
            })
            .collect();
        let mut hom = vec![BigInt::zero(); n];
        hom.push(BigInt::from(1));
        cone_ineqs.push(hom);
        let cone_eqs: Vec<Vec<BigInt>> = equations
            .iter()
            .map(|(a, b)| {
                let mut r = a.clone();
                r.push(-b);
                primitive(&r)
            })
            .collect();
        let gens = cone_generators(&cone_ineqs, &cone_eqs, n + 1);
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for r in gens.rays {
            if r[n].is_positive() {
                let h = Rational::from_integer(r[n].clone());
                vertices.push(r[..n].iter().map(|x| Rational::from_integer(x.clone()) / &h).collect());
            } else {
                rays.push(r[..n].to_vec());
            }
        }
        let lineality: Vec<Vec<BigInt>> = gens.lineality.iter().map(|l| l[..n].to_vec()).collect();
        let candidates: Vec<Vec<BigInt>> = inequalities.iter().map(|(a, b)| row_of(a, b)).collect();
        Self::finalize(n, vertices, rays, lineality, &candidates)
    }

    /// Convex hull of `vertices` plus the cone on `rays` plus the span of
    /// `lineality`; redundant generators are allowed.
    pub fn from_v(
        ambient: usize,
        vertices: &[Vec<Rational>],
        rays: &[Vec<Rational>],
        lineality: &[Vec<Rational>],
    ) -> Self {
        let n = ambient;
        if vertices.is_empty() {
            return Self::empty(n);
        }
        let lift = |v: &[Rational], h: i64| {
            let mut r = v.to_vec();
            r.push(Rational::from_integer(h.into()));
            primitive(&r)
        };
        let mut gens: Vec<Vec<BigInt>> = vertices.iter().map(|v| lift(v, 1)).collect();
        gens.extend(rays.iter().map(|r| lift(r, 0)));
        let lin: Vec<Vec<BigInt>> = lineality.iter().map(|l| lift(l, 0)).collect();
        let dual = cone_generators(&gens, &lin, n + 1);
        let to_h = |c: &Vec<BigInt>| -> (Vec<Rational>, Rational) {
            (
                c[..n].iter().map(|x| -Rational::from_integer(x.clone())).collect(),
                Rational::from_integer(c[n].clone()),
            )
        };
        let eqs: Vec<(Vec<Rational>, Rational)> = dual.lineality.iter().map(to_h).collect();
        let ineqs: Vec<(Vec<Rational>, Rational)> = dual
            .rays
            .iter()
            .filter(|c| c[..n].iter().any(|x| !x.is_zero()))
            .map(to_h)
            .collect();
        Self::from_h(n, &eqs, &ineqs)
    }

    /// Canonical form from an irredundant V-description and a list of valid
    /// inequalities `[a, b]` (`a·ω ≤ b`) among which every facet occurs.
    fn finalize(
        n: usize,
        vertices: Vec<Vec<Rational>>,
        rays: Vec<Vec<BigInt>>,
        lineality: Vec<Vec<BigInt>>,
        candidates: &[Vec<BigInt>],
    ) -> Self {
        if vertices.is_empty() {
            return Self::empty(n);
        }
        let lin_rat: Vec<Vec<Rational>> = lineality.iter().map(|l| to_rational(l)).collect();
        let lineality = canonical_row_basis(&lin_rat, n);
        let lin_proj = Complement::new(lineality.iter().map(|l| to_rational(l)).collect());

        let mut vertices: Vec<Vec<Rational>> = vertices.iter().map(|v| lin_proj.apply(v)).collect();
        vertices.sort();
        vertices.dedup();
        let mut rays: Vec<Vec<BigInt>> = rays
            .iter()
            .map(|r| primitive(&lin_proj.apply(&to_rational(r))))
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        rays.sort();
        rays.dedup();

        let span_rows = |vs: &[&Vec<Rational>], rs: &[&Vec<BigInt>]| -> Vec<Vec<Rational>> {
            let mut d: Vec<Vec<Rational>> = lineality.iter().map(|l| to_rational(l)).collect();
            d.extend(rs.iter().map(|r| to_rational(r)));
            if let Some((v0, rest)) = vs.split_first() {
                d.extend(
                    rest.iter()
                        .map(|v| v.iter().zip(v0.iter()).map(|(a, b)| a - b).collect()),
                );
            }
            d
        };
        let all_v: Vec<&Vec<Rational>> = vertices.iter().collect();
        let all_r: Vec<&Vec<BigInt>> = rays.iter().collect();
        let directions = span_rows(&all_v, &all_r);
        let dim = rank(&directions, n);

        let normals = nullspace(&directions, n);
        let normal_basis: Vec<Vec<Rational>> = canonical_row_basis(&normals, n)
            .iter()
            .map(|r| to_rational(r))
            .collect();
        let v0 = vertices[0].clone();
        let mut equations: Vec<Vec<BigInt>> = normal_basis.iter().map(|a| row_of(a, &dot(a, &v0))).collect();
        equations.sort();

        let hull_proj = Complement::new(normal_basis);
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut inequalities = Vec::new();
        for c in candidates {
            let (a, b) = split(c);
            let tight_v: Vec<bool> = vertices.iter().map(|v| dot_int(a, v) == b).collect();
            let tight_r: Vec<bool> = rays.iter().map(|r| int_dot(a, r).is_zero()).collect();
            if tight_v.iter().all(|&t| t) && tight_r.iter().all(|&t| t) {
                continue;
            }
            if !tight_v.iter().any(|&t| t) {
                continue;
            }
            let mut key = tight_v.clone();
            key.extend(&tight_r);
            if seen.contains(&key) {
                continue;
            }
            let fv: Vec<&Vec<Rational>> = vertices
                .iter()
                .zip(&tight_v)
                .filter(|(_, &t)| t)
                .map(|(v, _)| v)
                .collect();
            let fr: Vec<&Vec<BigInt>> = rays.iter().zip(&tight_r).filter(|(_, &t)| t).map(|(r, _)| r).collect();
            if rank(&span_rows(&fv, &fr), n) + 1 != dim {
                continue;
            }
            seen.insert(key);
            let a_rat = to_rational(a);
            let a_in = hull_proj.apply(&a_rat);
            let shift: Vec<Rational> = a_rat.iter().zip(&a_in).map(|(x, y)| x - y).collect();
            let b_in = &b - dot(&shift, &v0);
            inequalities.push(row_of(&a_in, &b_in));
        }
        inequalities.sort();
        inequalities.dedup();

        Polyhedron {
            ambient: n,
            dim: Some(dim),
            equations,
            inequalities,
            vertices,
            rays,
            lineality,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension, `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.dim.is_none()
    }

    pub fn equations(&self) -> &[Vec<BigInt>] {
        &self.equations
    }

    pub fn inequalities(&self) -> &[Vec<BigInt>] {
        &self.inequalities
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn contains(&self, w: &[Rational]) -> bool {
        if self.is_empty() {
            return false;
        }
        self.equations.iter().all(|r| {
            let (a, b) = split(r);
            dot_int(a, w) == b
        }) && self.inequalities.iter().all(|r| {
            let (a, b) = split(r);
            dot_int(a, w) <= b
        })
    }

    /// Whether `w` lies in the relative interior.
    pub fn contains_in_relative_interior(&self, w: &[Rational]) -> bool {
        self.contains(w)
            && self.inequalities.iter().all(|r| {
                let (a, b) = split(r);
                dot_int(a, w) < b
            })
    }

    fn contains_direction(&self, d: &[BigInt], both_ways: bool) -> bool {
        self.equations.iter().all(|r| int_dot(&r[..self.ambient], d).is_zero())
            && self.inequalities.iter().all(|r| {
                let x = int_dot(&r[..self.ambient], d);
                if both_ways {
                    x.is_zero()
                } else {
                    !x.is_positive()
                }
            })
    }

    /// Set containment `other ⊆ self`.
    pub fn contains_polyhedron(&self, other: &Polyhedron) -> bool {
        if other.is_empty() {
            return true;
        }
        if self.is_empty() {
            return false;
        }
        other.vertices.iter().all(|v| self.contains(v))
            && other.rays.iter().all(|r| self.contains_direction(r, false))
            && other.lineality.iter().all(|l| self.contains_direction(l, true))
    }

    /// A rational point of the relative interior: the vertex barycenter
    /// plus the sum of the rays.
    pub fn relative_interior_point(&self) -> Option<Vec<Rational>> {
        if self.is_empty() {
            return None;
        }
        let k = Rational::from_integer(BigInt::from(self.vertices.len()));
        let mut p = vec![Rational::zero(); self.ambient];
        for v in &self.vertices {
            for (x, y) in p.iter_mut().zip(v) {
                *x += y;
            }
        }
        for x in p.iter_mut() {
            *x /= &k;
        }
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += Rational::from_integer(y.clone());
            }
        }
        Some(p)
    }

    /// Spanning set of the linear space parallel to the affine hull.
    pub fn direction_space(&self) -> Vec<Vec<Rational>> {
        let mut d: Vec<Vec<Rational>> = self.lineality.iter().map(|l| to_rational(l)).collect();
        d.extend(self.rays.iter().map(|r| to_rational(r)));
        if let Some((v0, rest)) = self.vertices.split_first() {
            d.extend(rest.iter().map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect()));
        }
        d
    }

    /// Dimension of the image under the linear map with the given rows.
    pub fn projected_dim(&self, rows: &[Vec<Rational>]) -> usize {
        let images: Vec<Vec<Rational>> = self
            .direction_space()
            .iter()
            .map(|d| rows.iter().map(|a| dot(a, d)).collect())
            .collect();
        rank(&images, rows.len())
    }

    fn h_rows(&self) -> (Vec<(Vec<Rational>, Rational)>, Vec<(Vec<Rational>, Rational)>) {
        let conv = |r: &Vec<BigInt>| {
            let (a, b) = split(r);
            (to_rational(a), b)
        };
        (
            self.equations.iter().map(conv).collect(),
            self.inequalities.iter().map(conv).collect(),
        )
    }

    pub fn intersection(&self, other: &Polyhedron) -> Polyhedron {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
        if self.is_empty() || other.is_empty() {
            return Self::empty(self.ambient);
        }
        let (mut eqs, mut ineqs) = self.h_rows();
        let (e2, i2) = other.h_rows();
        eqs.extend(e2);
        ineqs.extend(i2);
        Self::from_h(self.ambient, &eqs, &ineqs)
    }

    /// All nonempty faces, the polyhedron itself included.
    pub fn faces(&self) -> Vec<Polyhedron> {
        if self.is_empty() {
            return vec![];
        }
        let nv = self.vertices.len();
        let tight: Vec<Vec<bool>> = self
            .inequalities
            .iter()
            .map(|row| {
                let (a, b) = split(row);
                let mut t: Vec<bool> = self.vertices.iter().map(|v| dot_int(a, v) == b).collect();
                t.extend(self.rays.iter().map(|r| int_dot(a, r).is_zero()));
                t
            })
            .collect();
        let full = vec![true; nv + self.rays.len()];
        let mut seen: HashSet<Vec<bool>> = HashSet::from([full.clone()]);
        let mut queue = vec![full];
        let mut out = Vec::new();
        while let Some(set) = queue.pop() {
            for t in &tight {
                let next: Vec<bool> = set.iter().zip(t).map(|(a, b)| *a && *b).collect();
                if next[..nv].iter().any(|&x| x) && !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push(next);
                }
            }
            out.push(self.face_from_set(&set));
        }
        out.sort();
        out
    }

    fn face_from_set(&self, set: &[bool]) -> Polyhedron {
        let nv = self.vertices.len();
        let verts = self
            .vertices
            .iter()
            .zip(&set[..nv])
            .filter(|(_, &t)| t)
            .map(|(v, _)| v.clone())
            .collect();
        let rays = self
            .rays
            .iter()
            .zip(&set[nv..])
            .filter(|(_, &t)| t)
            .map(|(r, _)| r.clone())
            .collect();
        Self::finalize(self.ambient, verts, rays, self.lineality.clone(), &self.inequalities)
    }

    /// Faces of codimension one, paired with their inequality rows.
    pub fn facets(&self) -> Vec<(Vec<BigInt>, Polyhedron)> {
        let nv = self.vertices.len();
        self.inequalities
            .iter()
            .map(|row| {
                let (a, b) = split(row);
                let mut t: Vec<bool> = self.vertices.iter().map(|v| dot_int(a, v) == b).collect();
                t.extend(self.rays.iter().map(|r| int_dot(a, r).is_zero()));
                debug_assert!(t[..nv].iter().any(|&x| x));
                (row.clone(), self.face_from_set(&t))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, ratio};

    fn h(a: &[i64], b: i64) -> (Vec<Rational>, Rational) {
        (a.iter().map(|&x| rat(x)).collect(), rat(b))
    }

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn halfplane_dual_description() {
        let p = Polyhedron::from_h(2, &[], &[h(&[1, -1], 0)]);
        assert_eq!(p.dim(), Some(2));
        assert_eq!(p.lineality(), &[ints(&[1, 1])]);
        assert_eq!(p.rays(), &[ints(&[-1, 1])]);
        assert_eq!(p.vertices(), &[q(&[0, 0])]);
        assert_eq!(p.inequalities(), &[ints(&[1, -1, 0])]);
    }

    #[test]
    fn simplex_vertices() {
        let p = Polyhedron::from_h(
            3,
            &[h(&[1, 1, 1], 1)],
            &[h(&[-1, 0, 0], 0), h(&[0, -1, 0], 0), h(&[0, 0, -1], 0)],
        );
        assert_eq!(p.dim(), Some(2));
        assert_eq!(p.vertices(), &[q(&[0, 0, 1]), q(&[0, 1, 0]), q(&[1, 0, 0])]);
        assert_eq!(p.equations(), &[ints(&[1, 1, 1, 1])]);
        assert_eq!(p.faces().len(), 7);
    }

    #[test]
    fn infeasible_is_empty() {
        let p = Polyhedron::from_h(1, &[], &[h(&[1], 0), h(&[-1], -1)]);
        assert!(p.is_empty());
    }

    #[test]
    fn v_and_h_round_trip() {
        let p = Polyhedron::from_v(3, &[q(&[0, 0, 0]), q(&[1, 0, 0]), q(&[0, 2, 0])], &[q(&[0, 0, 1])], &[]);
        let (e, i) = p.h_rows();
        let back = Polyhedron::from_h(3, &e, &i);
        assert_eq!(p, back);
        assert_eq!(p.dim(), Some(3));
        assert_eq!(p.inequalities().len(), 4);
    }

    #[test]
    fn redundant_rows_give_the_same_canonical_form() {
        let a = Polyhedron::from_h(2, &[], &[h(&[1, 0], 1), h(&[0, 1], 1), h(&[1, 1], 5)]);
        let b = Polyhedron::from_h(2, &[], &[h(&[2, 0], 2), h(&[0, 1], 1)]);
        assert_eq!(a, b);
    }

    #[test]
    fn facet_normals_are_projected_into_the_hull() {
        // A segment in the plane x2 = x1 given with a skewed inequality.
        let p = Polyhedron::from_h(2, &[h(&[1, -1], 0)], &[h(&[1, 0], 1), h(&[0, -1], 0)]);
        assert_eq!(p.dim(), Some(1));
        assert_eq!(p.inequalities(), &[ints(&[-1, -1, 0]), ints(&[1, 1, 2])]);
        assert!(p.contains(&[ratio(1, 2), ratio(1, 2)]));
        assert!(p.contains_in_relative_interior(&[ratio(1, 2), ratio(1, 2)]));
        assert!(!p.contains_in_relative_interior(&q(&[1, 1])));
    }

    #[test]
    fn faces_of_a_cone_with_lineality() {
        let p = Polyhedron::from_h(3, &[], &[h(&[1, -1, 0], 0), h(&[1, 0, -1], 0)]);
        let f = p.faces();
        let dims: Vec<_> = f.iter().map(|x| x.dim().unwrap()).collect();
        assert_eq!(f.len(), 4);
        assert!(dims.contains(&1) && dims.contains(&3));
        let line = f.iter().find(|x| x.dim() == Some(1)).unwrap();
        assert!(p.contains_polyhedron(line));
        assert!(!line.contains_polyhedron(&p));
    }

    #[test]
    fn intersection_and_projection() {
        let a = Polyhedron::from_h(2, &[], &[h(&[1, -1], 0)]);
        let b = Polyhedron::from_h(2, &[], &[h(&[-1, 1], 0)]);
        let c = a.intersection(&b);
        assert_eq!(c.dim(), Some(1));
        assert_eq!(c.projected_dim(&[q(&[1, -1])]), 0);
        assert_eq!(c.projected_dim(&[q(&[1, 0])]), 1);
    }
}
