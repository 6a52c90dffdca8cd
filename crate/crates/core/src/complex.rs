//! Finite simplicial complexes over an ordered ground set.
//!
//! Faces are stored as increasing vectors of ground-set positions, so the
//! ground order is part of the state (the Hadamard complex depends on it).
//! Text form lists facets, e.g. `"1 2 3; 2 3 4"`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::ColexSubsets;
use crate::error::{Error, Result};
use crate::fvector::{check_admissible_chain, kk_report, AdmissibleVector, ChainReport, FVector};

/// Largest number of faces any construction here will materialise.
pub const MAX_FACES: usize = 2_000_000;

/// Largest vertex count accepted by [`random_complex`].
pub const MAX_RANDOM_VERTICES: usize = 14;

/// Facet-size bound used when none is given to [`random_complex`].
pub const DEFAULT_MAX_FACET: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<String>,
    faces: BTreeSet<Vec<usize>>,
}

fn check_cap(count: usize, what: &str) -> Result<()> {
    if count > MAX_FACES {
        return Err(Error::CapExceeded(format!("{what} would have {count} faces (cap {MAX_FACES})")));
    }
    Ok(())
}

fn split_facets(text: &str) -> Vec<Vec<String>> {
    text.split(';')
        .map(|f| f.split_whitespace().map(str::to_string).collect::<Vec<_>>())
        .filter(|f| !f.is_empty())
        .collect()
}

fn label_order(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        _ => a.cmp(b),
    }
}

impl SimplicialComplex {
    /// Downward closure of `facets` (given by position in `ground`).
    fn close(ground: Vec<String>, facets: &[Vec<usize>]) -> Result<Self> {
        let mut faces = BTreeSet::new();
        faces.insert(Vec::new());
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() >= usize::BITS as usize - 1 || (1usize << f.len()) > MAX_FACES {
                return Err(Error::CapExceeded(format!("facet with {} vertices", f.len())));
            }
            for mask in 0usize..(1 << f.len()) {
                faces.insert((0..f.len()).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect());
            }
            check_cap(faces.len(), "closure")?;
        }
        Ok(SimplicialComplex { ground, faces })
    }

    pub fn from_facets<S: AsRef<str>>(ground: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let ground: Vec<String> = ground.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = BTreeSet::new();
        for g in &ground {
            if !seen.insert(g.as_str()) {
                return Err(Error::MalformedVector(format!("label {g} repeated in ground set")));
            }
        }
        let positions = facets
            .iter()
            .map(|facet| {
                facet
                    .iter()
                    .map(|l| {
                        ground
                            .iter()
                            .position(|g| g == l.as_ref())
                            .ok_or_else(|| Error::LabelNotInGround(l.as_ref().to_string()))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::close(ground, &positions)
    }

    /// Parses `"1 2 3; 2 3 4"`. The ground set is the labels used, integers
    /// ordered numerically and before any other labels.
    pub fn parse(text: &str) -> Result<Self> {
        let facets = split_facets(text);
        let mut ground: Vec<String> = facets.iter().flatten().cloned().collect();
        ground.sort_by(|a, b| label_order(a, b));
        ground.dedup();
        Self::from_facets(&ground, &facets)
    }

    /// Like [`SimplicialComplex::parse`] with an explicit, space-separated ground set.
    pub fn parse_on(ground: &str, text: &str) -> Result<Self> {
        let ground: Vec<&str> = ground.split_whitespace().collect();
        let facets: Vec<Vec<&str>> =
            text.split(';').map(|f| f.split_whitespace().collect::<Vec<_>>()).filter(|f| !f.is_empty()).collect();
        Self::from_facets(&ground, &facets)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    /// All faces, the empty face first.
    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.faces.contains(face)
    }

    pub fn labels_of(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.ground[v].clone()).collect()
    }

    /// Positions of the given labels, sorted.
    pub fn face_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut f = labels
            .iter()
            .map(|l| {
                self.ground
                    .iter()
                    .position(|g| g == l.as_ref())
                    .ok_or_else(|| Error::LabelNotInGround(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        f.sort_unstable();
        f.dedup();
        Ok(f)
    }

    /// Vertices in ground order.
    pub fn vertices(&self) -> Vec<usize> {
        self.faces.iter().filter(|f| f.len() == 1).map(|f| f[0]).collect()
    }

    /// Inclusion-maximal faces, in the stored order.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| {
                !(0..self.ground.len()).any(|v| {
                    if f.contains(&v) {
                        return false;
                    }
                    let mut g = (*f).clone();
                    g.push(v);
                    g.sort_unstable();
                    self.faces.contains(&g)
                })
            })
            .cloned()
            .collect()
    }

    /// Every face minus one vertex is again a face.
    pub fn is_downward_closed(&self) -> bool {
        self.faces.contains(&Vec::new())
            && self.faces.iter().all(|f| {
                (0..f.len()).all(|skip| {
                    let g: Vec<usize> =
                        f.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                    self.faces.contains(&g)
                })
            })
    }

    pub fn f_vector(&self) -> FVector {
        let top = self.faces.iter().map(Vec::len).max().unwrap_or(0);
        let mut counts = vec![0u64; top + 1];
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        FVector::from_u64s(&counts).expect("the empty face is always present")
    }

    /// `{ G : F u G in D, F n G empty }`, on the ground set minus `F`.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let mut f = face.to_vec();
        f.sort_unstable();
        if !self.faces.contains(&f) {
            return Err(Error::FaceNotInComplex(format!("{{{}}}", self.labels_of(&f).join(" "))));
        }
        let keep: Vec<usize> = (0..self.ground.len()).filter(|v| !f.contains(v)).collect();
        let mut new_pos = vec![usize::MAX; self.ground.len()];
        for (i, &v) in keep.iter().enumerate() {
            new_pos[v] = i;
        }
        let faces = self
            .faces
            .iter()
            .filter(|g| f.iter().all(|v| g.contains(v)))
            .map(|g| g.iter().filter(|v| !f.contains(v)).map(|&v| new_pos[v]).collect())
            .collect();
        Ok(SimplicialComplex { ground: keep.iter().map(|&v| self.ground[v].clone()).collect(), faces })
    }

    pub fn link_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<SimplicialComplex> {
        let f = self.face_of(labels)?;
        self.link(&f)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self
            .facets()
            .iter()
            .filter(|g| !g.is_empty())
            .map(|g| self.labels_of(g).join(" "))
            .collect();
        write!(f, "{}", facets.join("; "))
    }
}

/// First `f_i` colex (i+1)-subsets of the naturals, for each `i`.
pub fn compressed_realize(f: &FVector) -> Result<SimplicialComplex> {
    if let Some(first) = kk_report(f).failures.first() {
        return Err(Error::NotKruskalKatona { index: first.index });
    }
    let sizes = f
        .entries()
        .iter()
        .map(|e| e.to_usize().filter(|&n| n <= MAX_FACES))
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| Error::CapExceeded(format!("vector {f} has an entry above {MAX_FACES}")))?;
    check_cap(sizes.iter().sum(), "realisation")?;
    let mut faces = BTreeSet::new();
    let mut n = 0;
    for (k, &count) in sizes.iter().enumerate() {
        for s in ColexSubsets::new(k).take(count) {
            if let Some(&m) = s.last() {
                n = n.max(m + 1);
            }
            faces.insert(s);
        }
    }
    let c = SimplicialComplex { ground: (1..=n).map(|v| v.to_string()).collect(), faces };
    assert!(c.is_downward_closed(), "colex initial segments of a Kruskal-Katona vector must close up");
    Ok(c)
}

fn disjoint_labels(left: &[String], right: &[String]) -> Vec<String> {
    let taken: BTreeSet<&String> = left.iter().collect();
    right
        .iter()
        .map(|l| {
            let mut l = l.clone();
            while taken.contains(&l) {
                l.push('\'');
            }
            l
        })
        .collect()
}

/// Faces `s u t` over the disjoint union of the ground sets.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    check_cap(a.faces.len().saturating_mul(b.faces.len()), "join")?;
    let shift = a.ground.len();
    let mut ground = a.ground.clone();
    ground.extend(disjoint_labels(&a.ground, &b.ground));
    let mut faces = BTreeSet::new();
    for s in &a.faces {
        for t in &b.faces {
            let mut u = s.clone();
            u.extend(t.iter().map(|v| v + shift));
            faces.insert(u);
        }
    }
    Ok(SimplicialComplex { ground, faces })
}

/// Faces `{(s_1,t_1), ..., (s_k,t_k)}` for equal-size faces `s`, `t`, both
/// listed in ground order. The ground set is the product, ordered
/// lexicographically.
pub fn hadamard_complex(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    let fa = a.f_vector();
    let fb = b.f_vector();
    let total: BigUint = fa.entries().iter().zip(fb.entries()).map(|(x, y)| x * y).sum();
    check_cap(total.to_usize().unwrap_or(usize::MAX), "Hadamard complex")?;
    let nb = b.ground.len();
    let ground = a
        .ground
        .iter()
        .flat_map(|x| b.ground.iter().map(move |y| format!("({x},{y})")))
        .collect();
    let mut faces = BTreeSet::new();
    for s in &a.faces {
        for t in b.faces.iter().filter(|t| t.len() == s.len()) {
            faces.insert(s.iter().zip(t).map(|(&x, &y)| x * nb + y).collect());
        }
    }
    Ok(SimplicialComplex { ground, faces })
}

/// Ground set `ground x [c]`; a set of pairs is a face when its projection is
/// injective and lands on a face.
pub fn dilate_complex(a: &SimplicialComplex, c: usize) -> Result<SimplicialComplex> {
    if c == 0 {
        return Err(Error::NonPositive { what: "dilation factor" });
    }
    let total = a.faces.iter().try_fold(0usize, |acc, f| {
        c.checked_pow(f.len() as u32).and_then(|n| acc.checked_add(n))
    });
    check_cap(total.unwrap_or(usize::MAX), "dilation")?;
    let ground = a
        .ground
        .iter()
        .flat_map(|x| (1..=c).map(move |j| format!("({x},{j})")))
        .collect();
    let mut faces = BTreeSet::new();
    for f in &a.faces {
        let mut choice = vec![0usize; f.len()];
        loop {
            faces.insert(f.iter().zip(&choice).map(|(&v, &j)| v * c + j).collect());
            let Some(pos) = choice.iter().rposition(|&j| j + 1 < c) else { break };
            choice[pos] += 1;
            for j in &mut choice[pos + 1..] {
                *j = 0;
            }
        }
    }
    Ok(SimplicialComplex { ground, faces })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkSum {
    /// `(0, f(lk v))` for each vertex `v` in ground order.
    pub betas: Vec<AdmissibleVector>,
    /// The betas add up to `(0, f_0, 2 f_1, ..., d f_{d-1})`.
    pub identity_holds: bool,
    pub chain: ChainReport,
}

impl LinkSum {
    pub fn holds(&self) -> bool {
        self.identity_holds && self.chain.holds()
    }
}

pub fn link_sum_decomposition(delta: &SimplicialComplex) -> Result<LinkSum> {
    let f = delta.f_vector();
    let mut betas = Vec::new();
    for v in delta.vertices() {
        let mut entries = vec![BigUint::default()];
        entries.extend(delta.link(&[v])?.f_vector().entries().iter().cloned());
        betas.push(AdmissibleVector::new(entries)?);
    }
    let mut total = vec![BigUint::default(); f.len()];
    for b in &betas {
        for (p, e) in b.entries().iter().enumerate() {
            total[p] += e;
        }
    }
    let identity_holds = total
        .iter()
        .enumerate()
        .all(|(p, s)| *s == f.at(p) * BigUint::from(p));
    let chain = check_admissible_chain(&f, &betas);
    Ok(LinkSum { betas, identity_holds, chain })
}

/// Seeded random complex on `1..=n`. Every vertex is present; a subset `S`
/// with `2 <= |S| <= max_facet` becomes a facet with probability
/// `density^(|S|-1)`.
pub fn random_complex(n: usize, density: Ratio<u32>, seed: u64, max_facet: usize) -> Result<SimplicialComplex> {
    if n > MAX_RANDOM_VERTICES {
        return Err(Error::CapExceeded(format!("{n} vertices (cap {MAX_RANDOM_VERTICES})")));
    }
    if *density.numer() > *density.denom() {
        return Err(Error::MalformedVector(format!("density {density} exceeds 1")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut facets: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size > max_facet {
            continue;
        }
        let keep = (1..size).all(|_| {
            *density.numer() > 0 && rng.gen_ratio(*density.numer(), *density.denom())
        });
        if keep {
            facets.push((0..n).filter(|b| mask >> b & 1 == 1).collect());
        }
    }
    SimplicialComplex::close((1..=n).map(|v| v.to_string()).collect(), &facets)
}
