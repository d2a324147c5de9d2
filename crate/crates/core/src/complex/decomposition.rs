use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::cone::{Cone, Polyhedron};
use crate::error::{invalid, Error, Result};
use crate::exact::{primitive_int, IntegerLattice, Rational, Subspace};

/// One polytope of the decomposition together with its dual cell.
#[derive(Clone, Debug)]
pub struct Cell {
    pub id: String,
    pub polytope: Polyhedron,
    pub dual: Option<Polyhedron>,
}

/// Raw input for [`Decomposition::new`].
#[derive(Clone, Debug, Default)]
pub struct DecompositionSpec {
    pub ambient_dim: usize,
    /// `(id, rows)` with each row `[a..., b]` meaning `a.x <= b`.
    pub polytopes: Vec<(String, Vec<Vec<Rational>>)>,
    /// `(q, p)`: `q` is a face of `p`.
    pub faces: Vec<(String, String)>,
    /// `(id, vertices, rays)`.
    pub dual_cells: Vec<(String, Vec<Vec<Rational>>, Vec<Vec<Rational>>)>,
    pub split_set: Vec<String>,
}

/// Validated polyhedral decomposition with face poset, dual cells and the
/// designated split set.
#[derive(Clone, Debug)]
pub struct Decomposition {
    ambient_dim: usize,
    cells: Vec<Cell>,
    index: BTreeMap<String, usize>,
    /// Supplied face pairs, by index.
    given_faces: Vec<(usize, usize)>,
    /// Reflexive transitive closure of the supplied pairs.
    order: BTreeSet<(usize, usize)>,
    split_set: BTreeSet<usize>,
}

impl Decomposition {
    /// Builds and validates: cells nonempty and distinct, supplied face pairs
    /// geometrically faces, dual cells of complementary dimension spanning the
    /// normal space, and dual cells reversing the face order.
    pub fn new(spec: DecompositionSpec) -> Result<Self> {
        let n = spec.ambient_dim;
        let mut cells = Vec::new();
        let mut index = BTreeMap::new();
        for (id, rows) in &spec.polytopes {
            if index.insert(id.clone(), cells.len()).is_some() {
                return invalid(format!("duplicate polytope id {id:?}"));
            }
            let mut ineqs = Vec::new();
            for r in rows {
                if r.len() != n + 1 {
                    return invalid(format!("polytope {id:?}: inequality row must have {} entries", n + 1));
                }
                ineqs.push((r[..n].to_vec(), r[n].clone()));
            }
            let polytope = Polyhedron::from_h(n, &ineqs, &[])?;
            if polytope.is_empty() {
                return invalid(format!("polytope {id:?} is empty"));
            }
            cells.push(Cell { id: id.clone(), polytope, dual: None });
        }
        let lookup = |id: &str| -> Result<usize> {
            index.get(id).copied().ok_or_else(|| Error::Invalid(format!("unknown polytope id {id:?}")))
        };
        for (id, verts, rays) in &spec.dual_cells {
            let i = lookup(id)?;
            if cells[i].dual.is_some() {
                return invalid(format!("duplicate dual cell for {id:?}"));
            }
            if verts.is_empty() {
                return invalid(format!("dual cell of {id:?} has no vertices"));
            }
            cells[i].dual = Some(Polyhedron::from_v(n, verts, rays, &[])?);
        }
        let mut given_faces = Vec::new();
        for (qid, pid) in &spec.faces {
            given_faces.push((lookup(qid)?, lookup(pid)?));
        }
        let mut split_set = BTreeSet::new();
        for id in &spec.split_set {
            split_set.insert(lookup(id)?);
        }
        let order = closure(cells.len(), &given_faces);
        let dec = Decomposition { ambient_dim: n, cells, index, given_faces, order, split_set };
        dec.validate()?;
        Ok(dec)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.cells.len() {
            for j in i + 1..self.cells.len() {
                if self.cells[i].polytope == self.cells[j].polytope {
                    return invalid(format!("polytopes {:?} and {:?} coincide", self.cells[i].id, self.cells[j].id));
                }
            }
        }
        for &(q, p) in &self.given_faces {
            if !self.cells[q].polytope.is_face_of(&self.cells[p].polytope) {
                return invalid(format!("{:?} is not a face of {:?}", self.cells[q].id, self.cells[p].id));
            }
        }
        for (i, c) in self.cells.iter().enumerate() {
            let Some(d) = &c.dual else { continue };
            let dim_p = c.polytope.dim().expect("nonempty");
            let dim_d = d.dim().expect("nonempty");
            if dim_p + dim_d != self.ambient_dim {
                return invalid(format!(
                    "dual cell of {:?} has dimension {dim_d}, expected {}",
                    c.id,
                    self.ambient_dim - dim_p
                ));
            }
            let normal = self.normal_subspace(i);
            if d.direction_space() != normal {
                return invalid(format!("dual cell of {:?} is not parallel to the normal space", c.id));
            }
        }
        for &(q, p) in &self.order {
            if q == p {
                continue;
            }
            if let (Some(dq), Some(dp)) = (&self.cells[q].dual, &self.cells[p].dual) {
                if !dp.is_face_of(dq) {
                    return invalid(format!(
                        "dual of {:?} is not a face of the dual of its face {:?}",
                        self.cells[p].id, self.cells[q].id
                    ));
                }
            }
        }
        Ok(())
    }

    /// Full intersection audit: each nonempty pairwise intersection must be a
    /// cell below both in the face order, and the supplied relation must be
    /// antisymmetric. Returns the list of violations.
    pub fn audit(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let mut by_shape: BTreeMap<Shape, usize> = BTreeMap::new();
        for (i, c) in self.cells.iter().enumerate() {
            by_shape.insert(shape(&c.polytope), i);
        }
        for i in 0..self.cells.len() {
            for j in i + 1..self.cells.len() {
                let (a, b) = (&self.cells[i], &self.cells[j]);
                let m = a.polytope.intersect(&b.polytope).expect("same ambient");
                if m.is_empty() {
                    continue;
                }
                match by_shape.get(&shape(&m)) {
                    None => problems.push(format!("intersection of {:?} and {:?} is not a cell", a.id, b.id)),
                    Some(&k) => {
                        if !self.order.contains(&(k, i)) || !self.order.contains(&(k, j)) {
                            problems.push(format!(
                                "intersection {:?} of {:?} and {:?} is not listed as a common face",
                                self.cells[k].id, a.id, b.id
                            ));
                        }
                    }
                }
            }
        }
        for &(q, p) in &self.order {
            if q != p && self.order.contains(&(p, q)) {
                problems.push(format!("face relation between {:?} and {:?} is not antisymmetric", self.cells[q].id, self.cells[p].id));
            }
        }
        problems
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index.get(id).copied().ok_or_else(|| Error::Invalid(format!("unknown polytope id {id:?}")))
    }

    pub fn cell(&self, id: &str) -> Result<&Cell> {
        Ok(&self.cells[self.index_of(id)?])
    }

    pub fn face_pairs(&self) -> &[(usize, usize)] {
        &self.given_faces
    }

    pub fn split_set(&self) -> impl Iterator<Item = &str> {
        self.split_set.iter().map(|&i| self.cells[i].id.as_str())
    }

    pub fn is_split(&self, id: &str) -> Result<bool> {
        Ok(self.split_set.contains(&self.index_of(id)?))
    }

    /// `q` is a face of `p` (reflexive).
    pub fn is_face(&self, q: &str, p: &str) -> Result<bool> {
        Ok(self.order.contains(&(self.index_of(q)?, self.index_of(p)?)))
    }

    pub fn dim(&self, id: &str) -> Result<usize> {
        Ok(self.cell(id)?.polytope.dim().expect("cells are nonempty"))
    }

    /// The cell equal to `p ∩ q`, if the intersection is nonempty and a cell.
    pub fn meet(&self, p: &str, q: &str) -> Result<Option<&str>> {
        let (a, b) = (self.cell(p)?, self.cell(q)?);
        if self.is_face(p, q)? {
            return Ok(Some(&a.id));
        }
        if self.is_face(q, p)? {
            return Ok(Some(&b.id));
        }
        let m = a.polytope.intersect(&b.polytope)?;
        if m.is_empty() {
            return Ok(None);
        }
        Ok(self.cells.iter().find(|c| c.polytope == m).map(|c| c.id.as_str()))
    }

    fn normal_subspace(&self, i: usize) -> Subspace {
        let dir = self.cells[i].polytope.direction_space();
        Subspace::annihilator_of(self.ambient_dim, dir.basis()).expect("width")
    }

    /// Saturated integer basis of the annihilator of the tangent space of `P`.
    pub fn normal_space(&self, id: &str) -> Result<IntegerLattice> {
        let s = self.normal_subspace(self.index_of(id)?);
        let gens = s.basis().iter().map(|b| primitive_int(b)).collect::<Vec<_>>();
        Ok(IntegerLattice::span(self.ambient_dim, &gens)?.saturate())
    }

    pub fn dual(&self, id: &str) -> Result<&Polyhedron> {
        self.cell(id)?
            .dual
            .as_ref()
            .ok_or_else(|| Error::Invalid(format!("no dual cell supplied for {id:?}")))
    }

    /// Cone of differences `t - t0` with `t` in the dual of `pv` and `t0` in
    /// the dual of `pkv`; requires `pv` to be a face of `pkv`.
    pub fn cone_kappa_v(&self, pv: &str, pkv: &str) -> Result<Cone> {
        if !self.is_face(pv, pkv)? {
            return invalid(format!("{pv:?} is not a face of {pkv:?}"));
        }
        let (d, d0) = (self.dual(pv)?, self.dual(pkv)?);
        let n = self.ambient_dim;
        let mut rays = Vec::new();
        for t in d.vertices() {
            for t0 in d0.vertices() {
                let diff: Vec<Rational> = t.iter().zip(&t0).map(|(a, b)| a - b).collect();
                if diff.iter().any(|x| !x.is_zero()) {
                    rays.push(diff);
                }
            }
        }
        rays.extend(d.rays());
        rays.extend(d0.rays().iter().map(|r| r.iter().map(|x| -x.clone()).collect()));
        let mut lin = d.lineality();
        lin.extend(d0.lineality());
        Cone::from_v(n, rays, lin)
    }

    /// Rows `[a..., b]` (meaning `a.x <= b`) describing cell `i`, with
    /// equalities written as pairs of opposite inequalities.
    pub fn inequality_rows(&self, i: usize) -> Vec<Vec<Rational>> {
        let p = &self.cells[i].polytope;
        let mut rows = Vec::new();
        for (a, b) in p.equalities() {
            rows.push(a.iter().cloned().chain([b.clone()]).collect::<Vec<_>>());
            rows.push(a.iter().map(|x| -x.clone()).chain([-b]).collect());
        }
        for (a, b) in p.inequalities() {
            rows.push(a.into_iter().chain([b]).collect());
        }
        rows
    }
}

type Shape = (Vec<Vec<Rational>>, Vec<Vec<Rational>>, Vec<Vec<Rational>>);

fn shape(p: &Polyhedron) -> Shape {
    (p.vertices(), p.rays(), p.lineality())
}

fn closure(n: usize, pairs: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(q, p) in pairs {
        reach[q][p] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    for (i, row) in reach.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            if r {
                out.insert((i, j));
            }
        }
    }
    out
}

