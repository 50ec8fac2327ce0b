//! Seeded sampling of coordinate changes, per-sample tropical data and
//! agreement across samples.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeffs::Coefficient;
use crate::error::{Error, Result};
use crate::groebner::{hilbert_function, krull_dimension, Ideal};
use crate::poly::{LinearTransform, TransformFamily};
use crate::polyhedra::{complex_to_json, PolyhedralComplex};
use crate::tropical::{groebner_complex, seeded_rng, transform_ideal, tropical_variety};

/// Retry cap for resampling singular matrices.
pub const SINGULAR_RETRIES: usize = 1000;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "TROPGEN_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GeneralLinear,
    Diagonal,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::GeneralLinear => "gl",
            Family::Diagonal => "diag",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Family::GeneralLinear),
            "diag" => Ok(Family::Diagonal),
            _ => Err(Error::PreconditionFailed(format!(
                "unknown family `{s}`, expected gl or diag"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplingPolicy {
    pub family: Family,
    pub bound: i64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SamplingPolicy {
    fn default() -> Self {
        SamplingPolicy {
            family: Family::GeneralLinear,
            bound: 100,
            samples: 5,
            seed: 0,
        }
    }
}

impl SamplingPolicy {
    pub fn new(family: Family, bound: i64, samples: usize, seed: u64) -> Self {
        SamplingPolicy {
            family,
            bound,
            samples,
            seed,
        }
    }
}

/// Source of invertible coordinate changes. The two built-in families are
/// provided by [`SamplingPolicy`]; other subgroups plug in here.
pub trait TransformSampler: Sync {
    fn sample(&self, n: usize, index: usize) -> Result<LinearTransform>;
    fn samples(&self) -> usize;
    fn seed(&self) -> u64;
    fn family_name(&self) -> String;
}

impl TransformSampler for SamplingPolicy {
    fn sample(&self, n: usize, index: usize) -> Result<LinearTransform> {
        sample_transform(self, n, index)
    }

    fn samples(&self) -> usize {
        self.samples
    }

    fn seed(&self) -> u64 {
        self.seed
    }

    fn family_name(&self) -> String {
        self.family.name().to_string()
    }
}

/// The `index`-th matrix of the policy: entries uniform in `[-B, B]`
/// (nonzero on the diagonal family), resampled while singular.
pub fn sample_transform(policy: &SamplingPolicy, n: usize, index: usize) -> Result<LinearTransform> {
    if policy.bound < 1 {
        return Err(Error::PreconditionFailed("entry bound must be positive".into()));
    }
    let b = policy.bound;
    let mut rng = seeded_rng(policy.seed, index as u64);
    for _ in 0..SINGULAR_RETRIES {
        let g = match policy.family {
            Family::GeneralLinear => {
                let m: Vec<Vec<i64>> = (0..n)
                    .map(|_| (0..n).map(|_| rng.gen_range(-b..=b)).collect())
                    .collect();
                LinearTransform::from_ints(&m, TransformFamily::General)
            }
            Family::Diagonal => {
                let m: Vec<Vec<i64>> = (0..n)
                    .map(|i| {
                        let mut d = 0;
                        while d == 0 {
                            d = rng.gen_range(-b..=b);
                        }
                        (0..n).map(|j| if i == j { d } else { 0 }).collect()
                    })
                    .collect();
                LinearTransform::from_ints(&m, TransformFamily::Diagonal)
            }
        };
        match g {
            Ok(g) => return Ok(g),
            Err(Error::SingularMatrix) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::PreconditionFailed(format!(
        "no invertible sample after {SINGULAR_RETRIES} draws"
    )))
}

/// Run `f` on a pool sized by `TROPGEN_THREADS` when it is set.
pub fn with_thread_limit<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let limit = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok());
    match limit {
        Some(k) if k > 0 => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

/// Distinct complexes across samples, in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bucket {
    pub complex: PolyhedralComplex,
    pub count: usize,
    pub sample_indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericReport {
    pub kind: &'static str,
    pub family: String,
    pub seed: u64,
    pub transforms: Vec<LinearTransform>,
    pub complexes: Vec<PolyhedralComplex>,
    pub buckets: Vec<Bucket>,
}

impl GenericReport {
    fn new(kind: &'static str, family: String, seed: u64, runs: Vec<(LinearTransform, PolyhedralComplex)>) -> Self {
        let mut buckets: Vec<Bucket> = Vec::new();
        for (i, (_, c)) in runs.iter().enumerate() {
            match buckets.iter_mut().find(|b| &b.complex == c) {
                Some(b) => {
                    b.count += 1;
                    b.sample_indices.push(i);
                }
                None => buckets.push(Bucket {
                    complex: c.clone(),
                    count: 1,
                    sample_indices: vec![i],
                }),
            }
        }
        let (transforms, complexes) = runs.into_iter().unzip();
        GenericReport {
            kind,
            family,
            seed,
            transforms,
            complexes,
            buckets,
        }
    }

    pub fn samples(&self) -> usize {
        self.complexes.len()
    }

    /// All samples gave the same complex.
    pub fn agreement(&self) -> bool {
        self.buckets.len() == 1
    }

    pub fn consensus(&self) -> Option<&PolyhedralComplex> {
        if self.agreement() {
            self.buckets.first().map(|b| &b.complex)
        } else {
            None
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "samples": self.samples(),
            "seed": self.seed,
            "family": self.family,
            "agreement": self.agreement(),
            "consensus": self.consensus().map(complex_to_json),
            "buckets": self
                .buckets
                .iter()
                .map(|b| json!({ "complex": complex_to_json(&b.complex), "count": b.count }))
                .collect::<Vec<_>>(),
        })
    }
}

fn per_sample<C: Coefficient>(
    ideal: &Ideal<C>,
    sampler: &dyn TransformSampler,
    f: impl Fn(&Ideal<C>) -> Result<PolyhedralComplex> + Sync,
) -> Result<Vec<(LinearTransform, PolyhedralComplex)>> {
    let n = ideal.nvars();
    (0..sampler.samples())
        .into_par_iter()
        .map(|i| {
            let g = sampler.sample(n, i)?;
            let c = f(&transform_ideal(ideal, &g)?)?;
            Ok((g, c))
        })
        .collect()
}

/// `T(g_i(I))` for every sample.
pub fn generic_tropical_variety<C: Coefficient>(
    ideal: &Ideal<C>,
    sampler: &dyn TransformSampler,
    d_max: u32,
) -> Result<GenericReport> {
    let runs = per_sample(ideal, sampler, |gi| tropical_variety(gi, d_max))?;
    Ok(GenericReport::new(
        "tropical_variety",
        sampler.family_name(),
        sampler.seed(),
        runs,
    ))
}

/// `GC(g_i(I))` for every sample.
pub fn generic_groebner_complex<C: Coefficient>(
    ideal: &Ideal<C>,
    sampler: &dyn TransformSampler,
    d_max: u32,
) -> Result<GenericReport> {
    let runs = per_sample(ideal, sampler, |gi| groebner_complex(gi, d_max))?;
    Ok(GenericReport::new(
        "groebner_complex",
        sampler.family_name(),
        sampler.seed(),
        runs,
    ))
}

/// Bucket statistics of `T(g_i(I))`. Only evidence about the samples drawn.
pub fn classify_orbit<C: Coefficient>(
    ideal: &Ideal<C>,
    sampler: &dyn TransformSampler,
    d_max: u32,
) -> Result<GenericReport> {
    generic_tropical_variety(ideal, sampler, d_max)
}

/// Outcome of a check repeated over samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleCheck {
    pub check: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub failed_samples: Vec<usize>,
    pub detail: String,
}

impl SampleCheck {
    pub fn passed(&self) -> bool {
        self.failed_samples.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "status": if self.passed() { "pass" } else { "fail" },
            "samples": self.samples,
            "failed_samples": self.failed_samples,
            "seed": self.seed,
            "detail": self.detail,
        })
    }
}

fn failing(flags: Vec<bool>) -> Vec<usize> {
    flags
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i)
        .collect()
}

/// `T(g(I)) = T(I)` and `GC(g(I)) = GC(I)` for diagonal samples.
pub fn validate_diagonal_invariance<C: Coefficient>(
    ideal: &Ideal<C>,
    policy: &SamplingPolicy,
    d_max: u32,
) -> Result<SampleCheck> {
    if policy.family != Family::Diagonal {
        return Err(Error::PreconditionFailed(
            "diagonal invariance needs the diag family".into(),
        ));
    }
    let t = tropical_variety(ideal, d_max)?;
    let gc = groebner_complex(ideal, d_max)?;
    let n = ideal.nvars();
    let flags = (0..policy.samples)
        .into_par_iter()
        .map(|i| {
            let gi = transform_ideal(ideal, &sample_transform(policy, n, i)?)?;
            Ok(tropical_variety(&gi, d_max)? == t && groebner_complex(&gi, d_max)? == gc)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(SampleCheck {
        check: "diagonal_invariance",
        seed: policy.seed,
        samples: policy.samples,
        failed_samples: failing(flags),
        detail: format!("T(I) has f-vector {:?}", t.f_vector()),
    })
}

/// `dim T(g(I)) = dim S/I` for every sample, and `T(g(I)) = ∅` exactly
/// when `dim S/I = 0`.
pub fn dimension_checks<C: Coefficient>(
    ideal: &Ideal<C>,
    sampler: &dyn TransformSampler,
    d_max: u32,
) -> Result<SampleCheck> {
    let m = krull_dimension(ideal);
    let report = generic_tropical_variety(ideal, sampler, d_max)?;
    let flags = report
        .complexes
        .iter()
        .map(|t| match m {
            None | Some(0) => t.is_empty(),
            Some(m) => t.dim() == Some(m),
        })
        .collect();
    Ok(SampleCheck {
        check: "dimension",
        seed: sampler.seed(),
        samples: sampler.samples(),
        failed_samples: failing(flags),
        detail: format!("dim S/I = {}", m.map_or("-1".to_string(), |m| m.to_string())),
    })
}

/// The Hilbert function of `g(I)` agrees with that of `I` up to `d_max`.
pub fn hilbert_invariance<C: Coefficient>(
    ideal: &Ideal<C>,
    sampler: &dyn TransformSampler,
    d_max: u32,
) -> Result<SampleCheck> {
    let n = ideal.nvars();
    let h: Vec<u64> = (0..=d_max).map(|d| hilbert_function(ideal, d)).collect();
    let flags = (0..sampler.samples())
        .into_par_iter()
        .map(|i| {
            let gi = transform_ideal(ideal, &sampler.sample(n, i)?)?;
            Ok((0..=d_max).all(|d| hilbert_function(&gi, d) == h[d as usize]))
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(SampleCheck {
        check: "hilbert_invariance",
        seed: sampler.seed(),
        samples: sampler.samples(),
        failed_samples: failing(flags),
        detail: format!("H(d) for d <= {d_max}: {h:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PuiseuxScalar;
    use crate::polyhedra::{generic_tropical_fan, w_skeleton};
    use crate::text::{parse_polynomial, VarLayout};
    use num_traits::Zero;

    fn ideal(gens: &[&str], n: usize) -> Ideal<PuiseuxScalar> {
        let lay = VarLayout::new(n, 0);
        Ideal::new(n, gens.iter().map(|g| parse_polynomial(g, &lay, 1).unwrap()).collect()).unwrap()
    }

    #[test]
    fn sampling_is_deterministic() {
        let p = SamplingPolicy::new(Family::GeneralLinear, 3, 4, 9);
        assert_eq!(sample_transform(&p, 3, 2).unwrap(), sample_transform(&p, 3, 2).unwrap());
        assert_ne!(sample_transform(&p, 3, 1).unwrap(), sample_transform(&p, 3, 2).unwrap());
        let d = SamplingPolicy::new(Family::Diagonal, 3, 4, 9);
        let g = sample_transform(&d, 3, 0).unwrap();
        for (i, row) in g.matrix().iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(i == j, !x.is_zero());
            }
        }
    }

    #[test]
    fn unit_bound_samples_are_invertible() {
        let p = SamplingPolicy::new(Family::GeneralLinear, 1, 50, 0);
        for i in 0..50 {
            let g = sample_transform(&p, 2, i).unwrap();
            assert!(!g.det().is_zero());
            assert!(g
                .matrix()
                .iter()
                .flatten()
                .all(|x| x.numer().magnitude() <= &1u32.into() && x.is_integer()));
        }
    }

    #[test]
    fn principal_linear_form() {
        let i = ideal(&["x1 + t*x2 + x3"], 3);
        let p = SamplingPolicy::new(Family::GeneralLinear, 20, 3, 0);
        let gc = generic_groebner_complex(&i, &p, 1).unwrap();
        assert_eq!(gc.consensus(), Some(&generic_tropical_fan(3)));
        let t = generic_tropical_variety(&i, &p, 1).unwrap();
        assert_eq!(t.consensus(), Some(&w_skeleton(3, 2)));
        let j = t.to_json();
        assert_eq!(j["samples"], 3);
        assert_eq!(j["family"], "gl");
        assert_eq!(j["buckets"][0]["count"], 3);
    }

    #[test]
    fn diagonal_and_hilbert() {
        let i = ideal(&["x1*x2 - t*x3^2", "x1 + x2 + x3"], 3);
        let p = SamplingPolicy::new(Family::Diagonal, 10, 3, 1);
        assert!(validate_diagonal_invariance(&i, &p, 2).unwrap().passed());
        assert!(hilbert_invariance(&i, &p, 4).unwrap().passed());
        assert!(dimension_checks(&i, &p, 2).unwrap().passed());
    }

    #[test]
    fn zero_dimensional_is_empty() {
        let i = ideal(&["x1", "x2"], 2);
        let p = SamplingPolicy::new(Family::GeneralLinear, 5, 2, 0);
        let r = generic_tropical_variety(&i, &p, 2).unwrap();
        assert!(r.consensus().unwrap().is_empty());
        assert!(dimension_checks(&i, &p, 2).unwrap().passed());
    }
}
