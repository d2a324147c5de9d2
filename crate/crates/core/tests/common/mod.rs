//! Fixture loading, random instance generators and independent oracles shared
//! by the integration targets.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use tropsplit::complex::{decomposition_from_json, Decomposition};
use tropsplit::corpus::fixture;
use tropsplit::exact::{primitive_int, q, qr, IntMatrix, Rational};
use tropsplit::graph::{graph_from_json, TropicalGraph};
use tropsplit::split::{qsplit_from_json, QuasiSplitGraph};

pub fn text(name: &str) -> &'static str {
    fixture(name).unwrap_or_else(|| panic!("missing fixture {name}"))
}

pub fn dec(name: &str) -> Decomposition {
    decomposition_from_json(text(name)).expect("fixture decomposition")
}

pub fn graph(name: &str) -> TropicalGraph {
    graph_from_json(text(name)).expect("fixture graph")
}

pub fn qsplit(name: &str, d: &Decomposition) -> QuasiSplitGraph {
    qsplit_from_json(text(name), d).expect("fixture quasi-split graph")
}

pub fn qv(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| q(x)).collect()
}

pub fn iv(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// `a` is a positive multiple of `b`.
pub fn positively_parallel(a: &[Rational], b: &[Rational]) -> bool {
    let Some(k) = b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let t = &a[k] / &b[k];
    t.is_positive() && a.iter().zip(b).all(|(x, y)| *x == &t * y)
}

pub fn rand_int_vec(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<Rational> {
    (0..n).map(|_| q(rng.gen_range(lo..=hi))).collect()
}

pub fn rand_nonzero_vec(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<Rational> {
    loop {
        let v = rand_int_vec(rng, n, lo, hi);
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

pub fn rand_int_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize, bound: i64) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> =
        (0..r).map(|_| (0..c).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()).collect();
    IntMatrix::from_rows(c, &rows).unwrap()
}

/// Gcd of all `k x k` minors, by direct enumeration.
pub fn gcd_of_minors(m: &IntMatrix, k: usize) -> BigInt {
    let rows = combinations(m.nrows(), k);
    let cols = combinations(m.ncols(), k);
    let mut g = BigInt::zero();
    for r in &rows {
        for c in &cols {
            let sub: Vec<Vec<BigInt>> = r.iter().map(|&i| c.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
            g = g.gcd(&leibniz_det(&sub));
        }
    }
    g
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Permutation expansion; independent of the elimination routines.
pub fn leibniz_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, a, &mut total);
    total
}

fn permute(p: &mut Vec<usize>, k: usize, a: &[Vec<BigInt>], total: &mut BigInt) {
    if k == p.len() {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let mut prod = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for (i, &j) in p.iter().enumerate() {
            prod *= &a[i][j];
        }
        *total += prod;
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, a, total);
        p.swap(k, i);
    }
}

/// Number of `a in (Z/T)^K` with `M a = 0 mod T`, by enumeration.
pub fn count_roots_of_unity(m: &IntMatrix, t: u64) -> u64 {
    let k = m.ncols();
    let rows: Vec<Vec<i64>> =
        m.rows().iter().map(|r| r.iter().map(|x| (x.mod_floor(&BigInt::from(t))).try_into().unwrap()).collect()).collect();
    let t = t as i64;
    let mut a = vec![0i64; k];
    let mut count = 0u64;
    loop {
        if rows.iter().all(|r| r.iter().zip(&a).map(|(x, y)| x * y).sum::<i64>() % t == 0) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            a[i] += 1;
            if a[i] < t {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// Sign strings of the orthant decompositions, e.g. `c_mp`.
fn cell(signs: &[char]) -> String {
    format!("c_{}", signs.iter().collect::<String>())
}

fn dual_vertex(signs: &[char]) -> Vec<Rational> {
    signs.iter().map(|&s| if s == 'p' { q(1) } else { q(0) }).collect()
}

fn edge(id: &str, plus: &str, minus: &str, dir: Option<&[BigInt]>) -> Value {
    let mut e = json!({"id": id, "ends": [plus, minus], "kind": "tropical"});
    if let Some(d) = dir {
        e["direction"] = json!(d.iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>());
    }
    e
}

/// How a split edge of the star is resolved in the random split graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    Keep,
    NewVertex,
    MovedCorner,
}

/// A random star: one vertex in the split cell joined to distinct corner
/// cells, together with a random quasi-split resolution of every edge.
#[derive(Clone, Debug)]
pub struct StarInstance {
    pub n: usize,
    pub base: Value,
    pub top: Value,
    pub resolutions: Vec<Resolution>,
}

impl StarInstance {
    pub fn decomposition_name(&self) -> &'static str {
        if self.n == 2 {
            "square_split.dec.json"
        } else {
            "cube_split.dec.json"
        }
    }

    pub fn qsplit(&self, d: &Decomposition) -> tropsplit::Result<QuasiSplitGraph> {
        qsplit_from_json(&json!({"base": self.base, "top": self.top}).to_string(), d)
    }
}

pub fn random_star(rng: &mut ChaCha8Rng, n: usize, max_edges: usize) -> StarInstance {
    let centre: Vec<Rational> = (0..n).map(|_| qr(rng.gen_range(1..=5), 6)).collect();
    let mut corners: Vec<Vec<char>> = (0..1usize << n)
        .map(|bits| (0..n).map(|i| if bits >> i & 1 == 1 { 'p' } else { 'm' }).collect())
        .collect();
    corners.shuffle(rng);
    let k = rng.gen_range(1..=max_edges.min(corners.len()));
    let centre_cell = cell(&vec!['z'; n]);
    let mut base_v = vec![json!({"id": "v0", "polytope": centre_cell})];
    let mut base_e = Vec::new();
    let mut top_v = vec![json!({"id": "v0", "polytope": centre_cell})];
    let mut top_e = Vec::new();
    let mut vertex_map = serde_json::Map::new();
    vertex_map.insert("v0".into(), json!("v0"));
    let mut order = Vec::new();
    let mut resolutions = Vec::new();
    for (i, signs) in corners.iter().take(k).enumerate() {
        let (corner, id) = (format!("a{i}"), format!("e{i}"));
        let diff: Vec<Rational> = centre.iter().zip(dual_vertex(signs)).map(|(c, v)| c - v).collect();
        let mut dir = primitive_int(&diff);
        if rng.gen_bool(0.25) {
            dir.iter_mut().for_each(|x| *x *= 2);
        }
        base_v.push(json!({"id": corner, "polytope": cell(signs)}));
        base_e.push(edge(&id, "v0", &corner, Some(&dir)));
        order.push(json!(id));
        vertex_map.insert(corner.clone(), json!(corner));
        let r = *[Resolution::Keep, Resolution::NewVertex, Resolution::NewVertex, Resolution::MovedCorner]
            .choose(rng)
            .unwrap();
        resolutions.push(r);
        match r {
            Resolution::Keep => {
                top_v.push(json!({"id": corner, "polytope": cell(signs)}));
                top_e.push(edge(&id, "v0", &corner, None));
            }
            Resolution::NewVertex => {
                let mid = format!("b{i}");
                // Pointing into the split cell, so the new edge can have positive length.
                let d: Vec<BigInt> = signs
                    .iter()
                    .map(|&s| BigInt::from(if s == 'p' { -rng.gen_range(1..=2) } else { rng.gen_range(1..=2) }))
                    .collect();
                top_v.push(json!({"id": corner, "polytope": cell(signs)}));
                top_v.push(json!({"id": mid, "polytope": centre_cell}));
                top_e.push(edge(&id, "v0", &mid, None));
                let f = format!("f{i}");
                if rng.gen_bool(0.5) {
                    top_e.push(edge(&f, &mid, &corner, Some(&d)));
                } else {
                    let neg: Vec<BigInt> = d.iter().map(|x| -x).collect();
                    top_e.push(edge(&f, &corner, &mid, Some(&neg)));
                }
                vertex_map.insert(mid, json!(corner));
            }
            Resolution::MovedCorner => {
                let mut moved = signs.clone();
                let j = rng.gen_range(0..n);
                moved[j] = 'z';
                top_v.push(json!({"id": corner, "polytope": cell(&moved)}));
                top_e.push(edge(&id, "v0", &corner, None));
            }
        }
    }
    let base = json!({"vertices": base_v, "edges": base_e, "split_order": order});
    let top = json!({"vertices": top_v, "edges": top_e, "collapse": {"vertex_map": vertex_map}});
    StarInstance { n, base, top, resolutions }
}

/// A random segment between opposite corners through the split cell. Each end
/// is kept, resolved by a new vertex on a face of its corner, or moved to such
/// a face.
pub fn random_segment(rng: &mut ChaCha8Rng, n: usize) -> StarInstance {
    let c1: Vec<char> = (0..n).map(|_| if rng.gen_bool(0.5) { 'p' } else { 'm' }).collect();
    let c2: Vec<char> = c1.iter().map(|&c| if c == 'p' { 'm' } else { 'p' }).collect();
    let diff: Vec<Rational> = dual_vertex(&c1).iter().zip(dual_vertex(&c2)).map(|(a, b)| a - b).collect();
    let mut dir = primitive_int(&diff);
    if rng.gen_bool(0.25) {
        dir.iter_mut().for_each(|x| *x *= 2);
    }
    let base_v = vec![json!({"id": "u", "polytope": cell(&c1)}), json!({"id": "w", "polytope": cell(&c2)})];
    let base = json!({"vertices": base_v, "edges": [edge("e", "u", "w", Some(&dir))], "split_order": ["e"]});
    let mut top_v = Vec::new();
    let mut top_e = Vec::new();
    let mut vertex_map = serde_json::Map::new();
    let mut ends = Vec::new();
    let mut resolutions = Vec::new();
    for (v, signs) in [("u", &c1), ("w", &c2)] {
        vertex_map.insert(v.into(), json!(v));
        let mut face = signs.clone();
        let free: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        let free = if free.is_empty() { vec![rng.gen_range(0..n)] } else { free };
        free.iter().for_each(|&j| face[j] = 'z');
        let r = *[Resolution::Keep, Resolution::NewVertex, Resolution::NewVertex, Resolution::MovedCorner]
            .choose(rng)
            .unwrap();
        resolutions.push(r);
        match r {
            Resolution::Keep => {
                top_v.push(json!({"id": v, "polytope": cell(signs)}));
                ends.push(v.to_string());
            }
            Resolution::NewVertex => {
                let mid = format!("{v}2");
                let d: Vec<BigInt> = (0..n)
                    .map(|j| match (face[j], signs[j]) {
                        ('z', 'p') => BigInt::from(-rng.gen_range(1..=2)),
                        ('z', _) => BigInt::from(rng.gen_range(1..=2)),
                        _ => BigInt::zero(),
                    })
                    .collect();
                top_v.push(json!({"id": v, "polytope": cell(signs)}));
                top_v.push(json!({"id": mid, "polytope": cell(&face)}));
                top_e.push(edge(&format!("f{v}"), &mid, v, Some(&d)));
                vertex_map.insert(mid.clone(), json!(v));
                ends.push(mid);
            }
            Resolution::MovedCorner => {
                top_v.push(json!({"id": v, "polytope": cell(&face)}));
                ends.push(v.to_string());
            }
        }
    }
    top_e.push(edge("e", &ends[0], &ends[1], None));
    let top = json!({"vertices": top_v, "edges": top_e, "collapse": {"vertex_map": vertex_map}});
    StarInstance { n, base, top, resolutions }
}

/// Random nonzero cone direction with small integer entries.
pub fn random_eta(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    rand_nonzero_vec(rng, n, -5, 5)
}
