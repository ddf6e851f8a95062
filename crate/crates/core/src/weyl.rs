//! Weyl groups of types A–D, G₂ and F₄ as permutation groups, with their
//! reflections, a Coxeter element, the reflection representation on the
//! Cartan subalgebra `𝔱`, and cover presets for the periodic Toda lattice
//! and (twisted) Hitchin systems.
//!
//! Realizations: `A_n` permutes `n + 1` points; `B_n`, `C_n` and `D_n` act
//! as signed permutations on `2n` points (point `i` is `+e_i`, point `n + i`
//! is `−e_i`); `G₂` and `F₄` permute their 12 and 48 roots.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{rational, to_i64, BigRational, RationalMatrix};
use crate::galois::GaloisGroup;
use crate::perm::Permutation;
use crate::permgroup::PermGroup;
use crate::rhprym::{CoverSpec, RamificationSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeylType {
    A,
    B,
    C,
    D,
    G,
    F,
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for WeylType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Self::A),
            "B" => Ok(Self::B),
            "C" => Ok(Self::C),
            "D" => Ok(Self::D),
            "G" => Ok(Self::G),
            "F" => Ok(Self::F),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

/// Parses names such as `A3`, `g2` or `F4`.
pub fn parse_weyl_name(name: &str) -> Result<(WeylType, usize)> {
    let name = name.trim();
    let split = name
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| Error::Spec(format!("expected a Weyl type like A3, got {name:?}")))?;
    let kind = name[..split].parse()?;
    let rank = name[split..]
        .parse()
        .map_err(|_| Error::Spec(format!("bad rank in {name:?}")))?;
    Ok((kind, rank))
}

/// Which reflection classes receive reflection-type branch points in
/// non-simply-laced types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReflectionSplit {
    #[default]
    Long,
    Short,
    /// Half to each class, the odd point (if any) to the long class.
    Even,
    /// In proportion to the roots of each length: simple roots for the Toda
    /// preset, positive roots for the Hitchin presets.
    Roots,
}

impl FromStr for ReflectionSplit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "long" => Ok(Self::Long),
            "short" => Ok(Self::Short),
            "even" => Ok(Self::Even),
            "roots" => Ok(Self::Roots),
            other => Err(Error::Spec(format!("unknown reflection split {other:?}"))),
        }
    }
}

/// How a group element acts on `𝔱`, enough to take traces.
#[derive(Debug, Clone)]
enum TorusAction {
    Symmetric,
    Signed {
        n: usize,
    },
    Roots {
        /// Coordinates of each root in the simple-root basis.
        coords: Vec<Vec<i64>>,
        /// Point index of each simple root.
        simple: Vec<usize>,
        /// Point index of `−β` for each root `β`.
        negative: Vec<usize>,
        norms: Vec<i64>,
    },
}

impl TorusAction {
    fn trace(&self, images: &[u32]) -> i64 {
        match self {
            Self::Symmetric => {
                images.iter().enumerate().filter(|&(i, &x)| i as u32 == x).count() as i64 - 1
            }
            Self::Signed { n } => (0..*n)
                .map(|i| match images[i] as usize {
                    x if x == i => 1,
                    x if x == n + i => -1,
                    _ => 0,
                })
                .sum(),
            Self::Roots { coords, simple, .. } => simple
                .iter()
                .enumerate()
                .map(|(i, &s)| coords[images[s] as usize][i])
                .sum(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    kind: WeylType,
    rank: usize,
    galois: Arc<GaloisGroup>,
    lie_dim: usize,
    reflections: Vec<usize>,
    long_reflection_class: usize,
    short_reflection_class: Option<usize>,
    long_simple_roots: usize,
    long_positive_roots: usize,
    coxeter: usize,
    reflection_rep: usize,
    invariant_degrees: Vec<u64>,
}

impl WeylGroup {
    pub fn new(kind: WeylType, rank: usize, cap: usize) -> Result<Self> {
        let unsupported = || Error::UnsupportedType(format!("{kind}{rank}"));
        let (degree, gens, action) = match (kind, rank) {
            (WeylType::A, r) if r >= 1 => symmetric_realization(r),
            (WeylType::B | WeylType::C, r) if r >= 2 => signed_realization(r, false),
            (WeylType::D, r) if r >= 4 => signed_realization(r, true),
            (WeylType::G, 2) => root_realization(&g2_roots(), &g2_simple()),
            (WeylType::F, 4) => root_realization(&f4_roots(), &f4_simple()),
            _ => return Err(unsupported()),
        };
        let group = PermGroup::from_generators_with_degree(degree, &gens, cap)?;
        let generator_indices = group.generator_indices();
        let coxeter = generator_indices
            .iter()
            .fold(group.identity(), |acc, &s| group.mul(acc, s));
        let galois = Arc::new(GaloisGroup::new(group)?);
        let group = galois.group();

        let traces: Vec<i64> = (0..group.order()).map(|x| action.trace(group.images(x))).collect();
        let r = rank as i64;
        let reflections: Vec<usize> = (0..group.order())
            .filter(|&x| group.element_order(x) == 2 && traces[x] == r - 2)
            .collect();
        let is_long = |x: usize| -> bool {
            let img = group.images(x);
            match (kind, &action) {
                (WeylType::B, TorusAction::Signed { .. }) => img_moves(img) != 2,
                (WeylType::C, TorusAction::Signed { .. }) => img_moves(img) == 2,
                (_, TorusAction::Roots { negative, norms, .. }) => {
                    let max = norms.iter().copied().max().unwrap_or(0);
                    (0..norms.len()).any(|i| img[i] as usize == negative[i] && norms[i] == max)
                }
                _ => true,
            }
        };
        let mut long_classes: Vec<usize> = Vec::new();
        let mut short_classes: Vec<usize> = Vec::new();
        for &x in &reflections {
            let c = galois.cyclic_class_of_element(x);
            let bucket = if is_long(x) { &mut long_classes } else { &mut short_classes };
            if !bucket.contains(&c) {
                bucket.push(c);
            }
        }
        if long_classes.len() != 1 || short_classes.len() > 1 {
            return Err(Error::TableVerification(format!(
                "{kind}{rank}: unexpected reflection classes {long_classes:?}/{short_classes:?}"
            )));
        }
        let class_traces: Vec<i64> = galois
            .classes()
            .iter()
            .map(|c| traces[c.representative])
            .collect();
        let reflection_rep = galois.table().find_row(&class_traces).ok_or_else(|| {
            Error::TableVerification(format!("{kind}{rank}: reflection character not in table"))
        })?;

        let long_simple_roots = generator_indices.iter().filter(|&&s| is_long(s)).count();
        let long_positive_roots = reflections.iter().filter(|&&x| is_long(x)).count();
        let invariant_degrees = invariant_degrees(kind, rank);
        let lie_dim = rank + 2 * reflections.len();
        Ok(Self {
            kind,
            rank,
            galois,
            lie_dim,
            reflections,
            long_reflection_class: long_classes[0],
            short_reflection_class: short_classes.first().copied(),
            long_simple_roots,
            long_positive_roots,
            coxeter,
            reflection_rep,
            invariant_degrees,
        })
    }

    pub fn kind(&self) -> WeylType {
        self.kind
    }

    /// `r`, the dimension of `𝔱`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn galois(&self) -> &Arc<GaloisGroup> {
        &self.galois
    }

    pub fn group(&self) -> &PermGroup {
        self.galois.group()
    }

    /// `dim 𝒢 = r + #roots`.
    pub fn lie_dim(&self) -> usize {
        self.lie_dim
    }

    pub fn reflections(&self) -> &[usize] {
        &self.reflections
    }

    pub fn positive_root_count(&self) -> usize {
        self.reflections.len()
    }

    pub fn coxeter_element(&self) -> usize {
        self.coxeter
    }

    pub fn coxeter_number(&self) -> u64 {
        self.group().element_order(self.coxeter)
    }

    /// Cyclic class generated by a Coxeter element.
    pub fn coxeter_class(&self) -> usize {
        self.galois.cyclic_class_of_element(self.coxeter)
    }

    pub fn long_reflection_class(&self) -> usize {
        self.long_reflection_class
    }

    /// `None` for simply-laced types.
    pub fn short_reflection_class(&self) -> Option<usize> {
        self.short_reflection_class
    }

    /// Row of the character table holding the representation on `𝔱`.
    pub fn reflection_rep(&self) -> usize {
        self.reflection_rep
    }

    /// Degrees `d_i` of the basic invariant polynomials.
    pub fn invariant_degrees(&self) -> &[u64] {
        &self.invariant_degrees
    }

    /// `dim 𝔱^H` for the cyclic class `i`.
    pub fn torus_fixed_dim(&self, i: usize) -> i64 {
        self.galois.fixed_dims().get(i, self.reflection_rep)
    }

    /// `weights` is (long roots, all roots) among the roots that feed the
    /// preset, used by [`ReflectionSplit::Roots`].
    fn reflection_points(
        &self,
        count: u64,
        split: ReflectionSplit,
        weights: (usize, usize),
        ram: &mut RamificationSpec,
    ) {
        match (self.short_reflection_class, split) {
            (Some(short), ReflectionSplit::Roots) => {
                let long = count * weights.0 as u64 / weights.1 as u64;
                ram.add(self.long_reflection_class, long);
                ram.add(short, count - long);
            }
            (None, _) | (Some(_), ReflectionSplit::Long) => {
                ram.add(self.long_reflection_class, count);
            }
            (Some(short), ReflectionSplit::Short) => {
                ram.add(short, count);
            }
            (Some(short), ReflectionSplit::Even) => {
                ram.add(self.long_reflection_class, count.div_ceil(2));
                ram.add(short, count / 2);
            }
        }
    }

    fn spec(&self, genus: u64, ram: RamificationSpec) -> CoverSpec {
        CoverSpec::new(self.galois.clone(), genus, ram).expect("preset classes are nontrivial")
    }

    /// Cameral cover of `ℙ¹` for the periodic Toda lattice: `2r` points with
    /// reflection inertia and two with Coxeter inertia.
    pub fn toda_preset(&self, split: ReflectionSplit) -> CoverSpec {
        let mut ram = RamificationSpec::new();
        let weights = (self.long_simple_roots, self.rank);
        self.reflection_points(2 * self.rank as u64, split, weights, &mut ram);
        ram.add(self.coxeter_class(), 2);
        self.spec(0, ram)
    }

    /// Generic Hitchin cameral cover of a genus-`g` curve: all inertia is a
    /// reflection and the branch divisor has degree `(dim 𝒢 − r)(2g − 2)`.
    pub fn hitchin_preset(&self, genus: u64, split: ReflectionSplit) -> Result<CoverSpec> {
        if genus < 2 {
            return Err(Error::InvalidGenus {
                genus,
                reason: "the Hitchin preset needs g >= 2",
            });
        }
        Ok(self.twisted_spec(genus, 0, split))
    }

    /// Hitchin system twisted by an effective divisor of degree `deg_d`:
    /// `(dim 𝒢 − r)(2g − 2 + deg D)` reflection branch points.
    pub fn markman_preset(&self, genus: u64, deg_d: u64, split: ReflectionSplit) -> Result<CoverSpec> {
        if 2 * genus + deg_d <= 2 {
            return Err(Error::InvalidGenus {
                genus,
                reason: "the twisted preset needs 2g - 2 + deg D > 0",
            });
        }
        Ok(self.twisted_spec(genus, deg_d, split))
    }

    fn twisted_spec(&self, genus: u64, deg_d: u64, split: ReflectionSplit) -> CoverSpec {
        let roots = (self.lie_dim - self.rank) as u64;
        let count = roots * (2 * genus + deg_d - 2);
        let mut ram = RamificationSpec::new();
        let weights = (self.long_positive_roots, self.reflections.len());
        self.reflection_points(count, split, weights, &mut ram);
        self.spec(genus, ram)
    }

    /// Toda: `r`.
    pub fn expected_toda_dim(&self) -> i64 {
        self.rank as i64
    }

    /// Hitchin and twisted Hitchin:
    /// `dim 𝒢 (g − 1) + ((dim 𝒢 − r)/2) deg D`.
    pub fn expected_twisted_dim(&self, genus: u64, deg_d: u64) -> BigRational {
        let dim = self.lie_dim as i64;
        rational(dim * (genus as i64 - 1))
            + crate::exactla::ratio((dim - self.rank as i64) * deg_d as i64, 2)
    }

    /// Dimension of the base of the (twisted) Hitchin system,
    /// `Σ_i h⁰(ω(D)^{d_i}) − r·deg D`, with each `h⁰` from Riemann–Roch.
    pub fn expected_base_dim(&self, genus: u64, deg_d: u64) -> Result<i64> {
        let g = genus as i64;
        let base_deg = 2 * g - 2 + deg_d as i64;
        let mut total = 0;
        for &d in &self.invariant_degrees {
            let line_deg = d as i64 * base_deg;
            if line_deg <= 2 * g - 2 {
                return Err(Error::OutOfRegime(format!(
                    "degree {line_deg} line bundle on a genus {g} curve"
                )));
            }
            total += line_deg - g + 1;
        }
        Ok(total - self.rank as i64 * deg_d as i64)
    }
}

/// Number of points moved by a permutation.
fn img_moves(img: &[u32]) -> usize {
    img.iter().enumerate().filter(|&(i, &x)| i as u32 != x).count()
}

fn invariant_degrees(kind: WeylType, rank: usize) -> Vec<u64> {
    let r = rank as u64;
    match kind {
        WeylType::A => (2..=r + 1).collect(),
        WeylType::B | WeylType::C => (1..=r).map(|i| 2 * i).collect(),
        WeylType::D => {
            let mut d: Vec<u64> = (1..r).map(|i| 2 * i).collect();
            d.push(r);
            d.sort_unstable();
            d
        }
        WeylType::G => vec![2, 6],
        WeylType::F => vec![2, 6, 8, 12],
    }
}

fn transposition(n: usize, a: u32, b: u32) -> Vec<u32> {
    let mut img: Vec<u32> = (0..n as u32).collect();
    img.swap(a as usize, b as usize);
    img
}

fn symmetric_realization(rank: usize) -> (usize, Vec<Permutation>, TorusAction) {
    let n = rank + 1;
    let gens = (0..rank as u32)
        .map(|i| Permutation::from_images(transposition(n, i, i + 1)).unwrap())
        .collect();
    (n, gens, TorusAction::Symmetric)
}

/// Simple reflections `e_i ↔ e_{i+1}` followed by `e_n ↦ −e_n` (type B/C)
/// or `e_{n−1} ↦ −e_n` (type D).
fn signed_realization(n: usize, even: bool) -> (usize, Vec<Permutation>, TorusAction) {
    let size = 2 * n;
    let mut gens = Vec::with_capacity(n);
    for i in 0..n as u32 - 1 {
        let mut img = transposition(size, i, i + 1);
        img.swap(n + i as usize, n + i as usize + 1);
        gens.push(img);
    }
    let last = n as u32 - 1;
    let mut img: Vec<u32> = (0..size as u32).collect();
    if even {
        // e_{n-1} -> -e_n, e_n -> -e_{n-1}
        let (a, b) = (last - 1, last);
        img[a as usize] = n as u32 + b;
        img[n + b as usize] = a;
        img[b as usize] = n as u32 + a;
        img[n + a as usize] = b;
    } else {
        img.swap(last as usize, n + last as usize);
    }
    gens.push(img);
    let gens = gens
        .into_iter()
        .map(|img| Permutation::from_images(img).unwrap())
        .collect();
    (size, gens, TorusAction::Signed { n })
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflect(v: &[i64], alpha: &[i64]) -> Vec<i64> {
    let num = 2 * dot(v, alpha);
    let den = dot(alpha, alpha);
    debug_assert_eq!(num % den, 0);
    let c = num / den;
    v.iter().zip(alpha).map(|(x, a)| x - c * a).collect()
}

/// Realizes a Weyl group on the sorted list of `roots`, generated by the
/// reflections in `simple`.
fn root_realization(roots: &[Vec<i64>], simple: &[Vec<i64>]) -> (usize, Vec<Permutation>, TorusAction) {
    let mut roots = roots.to_vec();
    roots.sort();
    let index = |v: &[i64]| roots.iter().position(|r| r == v).expect("root system is closed");
    let gens = simple
        .iter()
        .map(|a| {
            let img = roots.iter().map(|v| index(&reflect(v, a)) as u32).collect();
            Permutation::from_images(img).unwrap()
        })
        .collect();
    let r = simple.len();
    let gram = RationalMatrix::from_fn(r, r, |i, j| rational(dot(&simple[i], &simple[j])));
    let coords = roots
        .iter()
        .map(|v| {
            let rhs: Vec<BigRational> = simple.iter().map(|a| rational(dot(v, a))).collect();
            gram.solve(&rhs)
                .expect("simple roots are independent")
                .iter()
                .map(|q| to_i64(q).expect("roots are integral in simple roots"))
                .collect()
        })
        .collect();
    let negative = roots
        .iter()
        .map(|v| index(&v.iter().map(|x| -x).collect::<Vec<_>>()))
        .collect();
    let norms = roots.iter().map(|v| dot(v, v)).collect();
    let simple_idx = simple.iter().map(|a| index(a)).collect();
    (
        roots.len(),
        gens,
        TorusAction::Roots {
            coords,
            simple: simple_idx,
            negative,
            norms,
        },
    )
}

/// G₂ in the plane `x + y + z = 0`.
fn g2_roots() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut v = vec![0; 3];
                v[i] = 1;
                v[j] = -1;
                out.push(v);
            }
        }
        let long: Vec<i64> = (0..3).map(|k| if k == i { 2 } else { -1 }).collect();
        out.push(long.iter().map(|x| -x).collect());
        out.push(long);
    }
    out
}

fn g2_simple() -> Vec<Vec<i64>> {
    vec![vec![1, -1, 0], vec![-2, 1, 1]]
}

/// F₄ roots scaled by 2 so every coordinate is an integer.
fn f4_roots() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for si in [-2, 2] {
                for sj in [-2, 2] {
                    let mut v = vec![0; 4];
                    v[i] = si;
                    v[j] = sj;
                    out.push(v);
                }
            }
        }
        for s in [-2, 2] {
            let mut v = vec![0; 4];
            v[i] = s;
            out.push(v);
        }
    }
    for mask in 0..16 {
        out.push((0..4).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect());
    }
    out
}

fn f4_simple() -> Vec<Vec<i64>> {
    vec![
        vec![0, 2, -2, 0],
        vec![0, 0, 2, -2],
        vec![0, 0, 0, 2],
        vec![1, -1, -1, -1],
    ]
}

/// Every Weyl group the dimension presets are exercised on.
pub const FLEET: &[(WeylType, usize)] = &[
    (WeylType::A, 1),
    (WeylType::A, 2),
    (WeylType::A, 3),
    (WeylType::A, 4),
    (WeylType::A, 5),
    (WeylType::A, 6),
    (WeylType::A, 7),
    (WeylType::B, 2),
    (WeylType::B, 3),
    (WeylType::B, 4),
    (WeylType::B, 5),
    (WeylType::C, 2),
    (WeylType::C, 3),
    (WeylType::C, 4),
    (WeylType::C, 5),
    (WeylType::D, 4),
    (WeylType::D, 5),
    (WeylType::G, 2),
    (WeylType::F, 4),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_CAP;

    fn weyl(kind: WeylType, rank: usize) -> WeylGroup {
        WeylGroup::new(kind, rank, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn a2_data() {
        let w = weyl(WeylType::A, 2);
        assert_eq!(w.group().order(), 6);
        assert_eq!(w.lie_dim(), 8);
        assert_eq!(w.reflections().len(), 3);
        assert_eq!(w.coxeter_number(), 3);
    }

    #[test]
    fn g2_data() {
        let w = weyl(WeylType::G, 2);
        assert_eq!(w.group().order(), 12);
        assert_eq!(w.group().degree(), 12);
        assert_eq!(w.lie_dim(), 14);
        assert_eq!(w.reflections().len(), 6);
        assert_eq!(w.coxeter_number(), 6);
        assert!(w.short_reflection_class().is_some());
    }

    #[test]
    fn a1_reflection_rep_is_sign() {
        let w = weyl(WeylType::A, 1);
        assert_eq!(w.group().order(), 2);
        assert_eq!(w.galois().table().rows()[w.reflection_rep()], vec![1, -1]);
        assert_eq!(w.coxeter_class(), w.long_reflection_class());
    }

    #[test]
    fn small_orders_and_coxeter_numbers() {
        for (kind, rank, order, h) in [
            (WeylType::A, 3, 24, 4),
            (WeylType::B, 2, 8, 4),
            (WeylType::B, 3, 48, 6),
            (WeylType::C, 3, 48, 6),
            (WeylType::D, 4, 192, 6),
        ] {
            let w = weyl(kind, rank);
            assert_eq!(w.group().order(), order, "{kind}{rank}");
            assert_eq!(w.coxeter_number(), h, "{kind}{rank}");
            assert_eq!(w.torus_fixed_dim(w.coxeter_class()), 0);
            assert_eq!(w.torus_fixed_dim(w.long_reflection_class()), rank as i64 - 1);
        }
    }

    #[test]
    fn invariant_degrees_match_lie_dimension() {
        for &(kind, rank) in FLEET {
            let d = invariant_degrees(kind, rank);
            assert_eq!(d.len(), rank);
            let expect = match kind {
                WeylType::A => rank * (rank + 2),
                WeylType::B | WeylType::C => rank * (2 * rank + 1),
                WeylType::D => rank * (2 * rank - 1),
                WeylType::G => 14,
                WeylType::F => 52,
            };
            assert_eq!(d.iter().map(|&x| 2 * x - 1).sum::<u64>(), expect as u64, "{kind}{rank}");
        }
    }

    #[test]
    fn unsupported_types() {
        for (kind, rank) in [(WeylType::G, 3), (WeylType::D, 3), (WeylType::B, 1), (WeylType::A, 0)] {
            assert!(matches!(
                WeylGroup::new(kind, rank, DEFAULT_CAP),
                Err(Error::UnsupportedType(_))
            ));
        }
        assert!(matches!("E".parse::<WeylType>(), Err(Error::UnsupportedType(_))));
        assert_eq!(parse_weyl_name("g2").unwrap(), (WeylType::G, 2));
        assert!(matches!(
            WeylGroup::new(WeylType::A, 8, DEFAULT_CAP),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn toda_examples() {
        for (kind, rank) in [(WeylType::A, 1), (WeylType::A, 3), (WeylType::G, 2)] {
            let w = weyl(kind, rank);
            let spec = w.toda_preset(ReflectionSplit::Long);
            assert_eq!(spec.base_genus(), 0);
            assert_eq!(spec.ramification().branch_points(), 2 * rank as u64 + 2);
            assert_eq!(spec.prym_dim_formula(w.reflection_rep()).unwrap(), rank as i64);
        }
        let a1 = weyl(WeylType::A, 1).toda_preset(ReflectionSplit::Long);
        assert_eq!(a1.ramification().count(1), 4);
    }

    #[test]
    fn hitchin_examples() {
        let a2 = weyl(WeylType::A, 2);
        let s = a2.hitchin_preset(2, ReflectionSplit::Long).unwrap();
        assert_eq!(s.ramification().branch_points(), 12);
        assert_eq!(s.prym_dim_formula(a2.reflection_rep()).unwrap(), 8);

        let b2 = weyl(WeylType::B, 2);
        let s = b2.hitchin_preset(3, ReflectionSplit::Long).unwrap();
        assert_eq!(s.ramification().branch_points(), 32);
        assert_eq!(s.prym_dim_formula(b2.reflection_rep()).unwrap(), 20);

        let a1 = weyl(WeylType::A, 1);
        let s = a1.hitchin_preset(2, ReflectionSplit::Long).unwrap();
        assert_eq!(s.ramification().branch_points(), 4);
        assert_eq!(s.prym_dim_formula(a1.reflection_rep()).unwrap(), 3);

        assert!(matches!(a1.hitchin_preset(1, ReflectionSplit::Long), Err(Error::InvalidGenus { .. })));
    }

    #[test]
    fn markman_examples() {
        let a2 = weyl(WeylType::A, 2);
        let s = a2.markman_preset(2, 2, ReflectionSplit::Long).unwrap();
        assert_eq!(s.prym_dim_formula(a2.reflection_rep()).unwrap(), 14);
        let a1 = weyl(WeylType::A, 1);
        let s = a1.markman_preset(1, 2, ReflectionSplit::Long).unwrap();
        assert_eq!(s.prym_dim_formula(a1.reflection_rep()).unwrap(), 2);
        let h = a2.hitchin_preset(3, ReflectionSplit::Long).unwrap();
        let m = a2.markman_preset(3, 0, ReflectionSplit::Long).unwrap();
        assert_eq!(h.ramification(), m.ramification());
        assert!(matches!(a1.markman_preset(1, 0, ReflectionSplit::Long), Err(Error::InvalidGenus { .. })));
    }

    #[test]
    fn base_dimensions() {
        assert_eq!(weyl(WeylType::A, 2).expected_base_dim(2, 0).unwrap(), 8);
        assert_eq!(weyl(WeylType::G, 2).expected_base_dim(3, 0).unwrap(), 28);
        assert_eq!(weyl(WeylType::A, 2).expected_base_dim(2, 2).unwrap(), 14);
        assert!(matches!(
            weyl(WeylType::A, 2).expected_base_dim(1, 0),
            Err(Error::OutOfRegime(_))
        ));
    }

    #[test]
    fn root_split_toda_is_realizable() {
        for (kind, rank) in [(WeylType::B, 3), (WeylType::C, 3), (WeylType::G, 2), (WeylType::F, 4)] {
            let w = weyl(kind, rank);
            let spec = w.toda_preset(ReflectionSplit::Roots);
            let short = w.short_reflection_class().unwrap();
            assert_eq!(
                spec.ramification().count(w.long_reflection_class()),
                2 * w.long_simple_roots as u64
            );
            assert_eq!(spec.ramification().count(short), 2 * (rank - w.long_simple_roots) as u64);
            assert!(spec.validate().is_clean(), "{kind}{rank}");
        }
        // All reflection points in the long class force a negative
        // isotypic dimension for C3, although the torus part is still r.
        let c3 = weyl(WeylType::C, 3);
        let spec = c3.toda_preset(ReflectionSplit::Long);
        assert!(!spec.validate().is_clean());
        assert_eq!(spec.prym_dim_formula(c3.reflection_rep()).unwrap(), 3);
    }

    #[test]
    fn split_keeps_torus_dimension() {
        let w = weyl(WeylType::B, 3);
        let dims: Vec<i64> = [
            ReflectionSplit::Long,
            ReflectionSplit::Short,
            ReflectionSplit::Even,
            ReflectionSplit::Roots,
        ]
        .into_iter()
        .map(|s| w.hitchin_preset(2, s).unwrap().prym_dim_formula(w.reflection_rep()).unwrap())
        .collect();
        assert_eq!(dims, vec![21, 21, 21, 21]);
        let short = w.short_reflection_class().unwrap();
        let even = w.toda_preset(ReflectionSplit::Even);
        assert_eq!(even.ramification().count(short), 3);
        assert_eq!(even.ramification().count(w.long_reflection_class()), 3);
    }
}
