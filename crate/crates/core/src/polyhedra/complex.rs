use std::collections::BTreeSet;

use rayon::prelude::*;

use super::Polyhedron;
use crate::coeffs::Rational;
use crate::error::{Error, Result};

/// Polyhedral complex stored by its maximal cells, sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyhedralComplex {
    ambient: usize,
    cells: Vec<Polyhedron>,
}

impl PolyhedralComplex {
    /// Complex generated by `cells`; empty cells and cells contained in
    /// another cell are dropped.
    pub fn new(ambient: usize, cells: Vec<Polyhedron>) -> Self {
        let mut cells: Vec<Polyhedron> = cells
            .into_iter()
            .filter(|c| !c.is_empty())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        cells.sort_by(|a, b| b.dim().cmp(&a.dim()).then(a.cmp(b)));
        let mut kept: Vec<Polyhedron> = Vec::new();
        for c in cells {
            if !kept.iter().any(|k| k.dim() > c.dim() && k.contains_polyhedron(&c)) {
                kept.push(c);
            }
        }
        kept.sort();
        PolyhedralComplex { ambient, cells: kept }
    }

    pub fn empty(ambient: usize) -> Self {
        PolyhedralComplex { ambient, cells: vec![] }
    }

    /// The complex with the single cell `Q^n`.
    pub fn trivial(ambient: usize) -> Self {
        Self::new(ambient, vec![Polyhedron::whole_space(ambient)])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Largest cell dimension, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().filter_map(|c| c.dim()).max()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.cells.iter().all(|c| c.dim() == d)
    }

    /// Every cell of the complex, maximal or not, each once.
    pub fn all_faces(&self) -> Vec<Polyhedron> {
        let set: BTreeSet<Polyhedron> = self
            .cells
            .par_iter()
            .flat_map(|c| c.faces())
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        set.into_iter().collect()
    }

    /// Number of cells in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(d) = self.dim() else { return vec![] };
        let mut f = vec![0; d + 1];
        for c in self.all_faces() {
            f[c.dim().unwrap()] += 1;
        }
        f
    }

    pub fn support_contains(&self, w: &[Rational]) -> bool {
        self.cells.iter().any(|c| c.contains(w))
    }

    /// Index into `faces` of the cell whose relative interior contains `w`.
    pub fn locate(faces: &[Polyhedron], w: &[Rational]) -> Option<usize> {
        faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(w))
            .min_by_key(|(_, f)| f.dim())
            .map(|(i, _)| i)
    }

    /// Cells of dimension at most `m`.
    pub fn skeleton(&self, m: usize) -> PolyhedralComplex {
        let mut cells: Vec<Polyhedron> = self.all_faces().into_iter().filter(|f| f.dim() == Some(m)).collect();
        cells.extend(self.cells.iter().filter(|c| c.dim().is_some_and(|d| d < m)).cloned());
        Self::new(self.ambient, cells)
    }

    /// Common refinement, supported on the intersection of the supports.
    pub fn common_refinement(&self, other: &PolyhedralComplex) -> Result<PolyhedralComplex> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "complexes in dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        let pairs: Vec<(&Polyhedron, &Polyhedron)> = self
            .cells
            .iter()
            .flat_map(|a| other.cells.iter().map(move |b| (a, b)))
            .collect();
        let cells: Vec<Polyhedron> = pairs
            .par_iter()
            .map(|(a, b)| a.intersection(b))
            .filter(|c| !c.is_empty())
            .collect();
        Ok(Self::new(self.ambient, cells))
    }

    /// Check that any two maximal cells meet in a common face.
    pub fn check_face_property(&self) -> Result<()> {
        let faces: Vec<BTreeSet<Polyhedron>> = self.cells.par_iter().map(|c| c.faces().into_iter().collect()).collect();
        for i in 0..self.cells.len() {
            for j in i + 1..self.cells.len() {
                let x = self.cells[i].intersection(&self.cells[j]);
                if x.is_empty() {
                    continue;
                }
                if !faces[i].contains(&x) || !faces[j].contains(&x) {
                    return Err(Error::InvalidComplex(format!(
                        "cells {i} and {j} do not meet in a common face"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether every cell contains the origin.
    pub fn is_fan(&self) -> bool {
        let zero = vec![Rational::from_integer(0.into()); self.ambient];
        self.cells.iter().all(|c| c.contains(&zero))
    }
}

/// Equality of complexes as sets of canonical maximal cells.
pub fn complex_equal(a: &PolyhedralComplex, b: &PolyhedralComplex) -> bool {
    a == b
}
