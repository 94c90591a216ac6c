//! Verification suites and their JSON-lines reports.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use shuffle_forge_core::polyvars::{Mono, SparsePoly, VarId};
use shuffle_forge_core::roots::{pbwd_keys, CartanType, KostantPartition, PbwdKey, RootSystem, Sys};
use shuffle_forge_core::rootvec::{closed_form, divided_power, root_vector, rtt_root_vector, RootVectorSpec, Sign};
use shuffle_forge_core::scalars::LaurentZ;
use shuffle_forge_core::shuffle::{relations, Rat, RatExpr, ShuffleAlgebra, Trig, TrigExpr};
use shuffle_forge_core::specmaps::{
    c_beta, dim_report, kappa, lusztig_member, phi_d, rtt_member, verify_leading_with, verify_vanishing, DimSettings,
    MonomialEvaluator, SpecImage,
};
use shuffle_forge_core::yangian;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;
use thiserror::Error;

/// Default cap on `|k|`, overridden by `SHUFFLE_FORGE_MAX_K`.
pub const DEFAULT_MAX_K: u32 = 6;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid suite name '{0}'")]
    InvalidSuite(String),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] shuffle_forge_core::Error),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

/// Reads the `|k|` cap from the environment.
pub fn max_k_cap() -> Result<u32, ConfigError> {
    match std::env::var("SHUFFLE_FORGE_MAX_K") {
        Ok(s) => s.trim().parse().map_err(|_| ConfigError::Invalid(format!("SHUFFLE_FORGE_MAX_K={s} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_K),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    Psirv,
    Phirv,
    Vanish,
    Leading,
    Dims,
    Lusztig,
    Rtt,
    YangianRelations,
    YangianLeading,
    YangianGood,
    YangianIntegral,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Relations,
        Suite::Psirv,
        Suite::Phirv,
        Suite::Vanish,
        Suite::Leading,
        Suite::Dims,
        Suite::Lusztig,
        Suite::Rtt,
        Suite::YangianRelations,
        Suite::YangianLeading,
        Suite::YangianGood,
        Suite::YangianIntegral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Psirv => "psirv",
            Suite::Phirv => "phirv",
            Suite::Vanish => "vanish",
            Suite::Leading => "leading",
            Suite::Dims => "dims",
            Suite::Lusztig => "lusztig",
            Suite::Rtt => "rtt",
            Suite::YangianRelations => "yangian-relations",
            Suite::YangianLeading => "yangian-leading",
            Suite::YangianGood => "yangian-good",
            Suite::YangianIntegral => "yangian-integral",
        }
    }

    fn is_yangian(self) -> bool {
        matches!(self, Suite::YangianRelations | Suite::YangianLeading | Suite::YangianGood | Suite::YangianIntegral)
    }
}

impl FromStr for Suite {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| ConfigError::InvalidSuite(s.to_string()))
    }
}

/// Parses `lo:hi`.
pub fn parse_range(s: &str) -> Result<(i64, i64), ConfigError> {
    let bad = || ConfigError::InvalidWindow(format!("'{s}' is not of the form lo:hi"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(ConfigError::InvalidWindow(format!("'{s}' is empty")));
    }
    Ok((lo, hi))
}

/// Parses a comma-separated degree vector.
pub fn parse_k(s: &str) -> Result<Vec<u32>, ConfigError> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| ConfigError::Invalid(format!("'{s}' is not a degree vector"))))
        .collect()
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub ty: CartanType,
    pub rank: usize,
    pub suite: Suite,
    pub window: (i32, i32),
    /// Largest `|k|` swept when `k` is not given.
    pub max_k: u32,
    pub k: Option<Vec<u32>>,
    /// Total degrees for `dims`.
    pub degrees: RangeInclusive<i64>,
    pub seed: u64,
    /// Random draws per instance for sampled suites.
    pub samples: usize,
    /// Wheel-check every product.
    pub strict: bool,
    /// Emit per-check wall times; reports are then no longer reproducible.
    pub timings: bool,
    pub jobs: usize,
}

impl SuiteConfig {
    pub fn new(ty: CartanType, rank: usize, suite: Suite) -> Self {
        SuiteConfig {
            ty,
            rank,
            suite,
            window: (-1, 1),
            max_k: 3,
            k: None,
            degrees: 0..=2,
            seed: 0,
            samples: 5,
            strict: false,
            timings: false,
            jobs: 1,
        }
    }

    /// Checks the configuration against the rank and the `|k|` cap.
    pub fn validate(&self, cap: u32) -> Result<Sys, ConfigError> {
        let sys = RootSystem::new(self.ty, self.rank)?;
        if self.ty == CartanType::A {
            return Err(ConfigError::Invalid("suites cover types C and D".into()));
        }
        if self.window.0 > self.window.1 || self.window.1 - self.window.0 > 8 {
            return Err(ConfigError::InvalidWindow(format!("{:?} must be nonempty and at most 9 wide", self.window)));
        }
        if self.suite.is_yangian() && self.window.0 < 0 {
            return Err(ConfigError::InvalidWindow("Yangian suites need nonnegative modes".into()));
        }
        if self.max_k > cap {
            return Err(ConfigError::CapExceeded(format!("max |k| {} is above the cap {cap}", self.max_k)));
        }
        if let Some(k) = &self.k {
            if k.len() != self.rank {
                return Err(ConfigError::Invalid(format!("k has {} entries, rank is {}", k.len(), self.rank)));
            }
            let total: u32 = k.iter().sum();
            if total > cap {
                return Err(ConfigError::CapExceeded(format!("|k| = {total} is above the cap {cap}")));
            }
        }
        if self.jobs == 0 {
            return Err(ConfigError::Invalid("--jobs must be positive".into()));
        }
        Ok(sys)
    }

    fn degree_vectors(&self) -> Vec<Vec<u32>> {
        match &self.k {
            Some(k) => vec![k.clone()],
            None => degree_vectors(self.rank, self.max_k),
        }
    }

    fn modes(&self) -> RangeInclusive<i32> {
        self.window.0..=self.window.1
    }
}

/// Nonzero degree vectors with `|k| ≤ max`, in lexicographic order.
pub fn degree_vectors(n: usize, max: u32) -> Vec<Vec<u32>> {
    (0..n)
        .map(|_| 0..=max)
        .multi_cartesian_product()
        .filter(|k| (1..=max).contains(&k.iter().sum()))
        .collect()
}

/// One line of the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub suite: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub instance: String,
    pub status: &'static str,
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl Record {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Final line of the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub summary: bool,
    pub suite: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub seed: u64,
    pub window: (i32, i32),
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut w, r)?;
            writeln!(w)?;
        }
        serde_json::to_writer(&mut w, &self.summary)?;
        writeln!(w)
    }
}

type Outcome = Result<(), String>;

struct Check {
    instance: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Check {
    fn new(instance: String, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Check { instance, run: Box::new(run) }
    }
}

/// Checks built together and run together; batches run one after another
/// so that per-batch caches can be dropped.
type Batch = Box<dyn FnOnce() -> Vec<Check> + Send>;

fn fail_on<E: std::fmt::Display>(e: E) -> String {
    format!("error: {e}")
}

fn kname(k: &[u32]) -> String {
    format!("k=({})", k.iter().join(","))
}

/// Runs the configured suite.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, ConfigError> {
    let sys = cfg.validate(max_k_cap()?)?;
    let batches = build(cfg, &sys);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| ConfigError::Invalid(format!("thread pool: {e}")))?;
    let mut records = Vec::new();
    for batch in batches {
        let checks = batch();
        let done: Vec<Record> = pool.install(|| {
            checks
                .par_iter()
                .map(|c| {
                    let t = Instant::now();
                    let out = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (c.run)()))
                        .unwrap_or_else(|_| Err("internal panic".into()));
                    Record {
                        suite: cfg.suite.name(),
                        ty: cfg.ty.to_string(),
                        rank: cfg.rank,
                        instance: c.instance.clone(),
                        status: if out.is_ok() { "pass" } else { "fail" },
                        witness: out.err(),
                        wall_ms: cfg.timings.then(|| t.elapsed().as_millis() as u64),
                    }
                })
                .collect()
        });
        records.extend(done);
    }
    let passed = records.iter().filter(|r| r.passed()).count();
    let summary = Summary {
        summary: true,
        suite: cfg.suite.name(),
        ty: cfg.ty.to_string(),
        rank: cfg.rank,
        seed: cfg.seed,
        window: cfg.window,
        checks: records.len(),
        passed,
        failed: records.len() - passed,
    };
    Ok(Report { records, summary })
}

fn build(cfg: &SuiteConfig, sys: &Sys) -> Vec<Batch> {
    let cfg = cfg.clone();
    let sys = sys.clone();
    match cfg.suite {
        Suite::Relations => vec![Box::new(move || relation_checks(&cfg, &sys))],
        Suite::Psirv => vec![Box::new(move || psirv_checks(&cfg, &sys))],
        Suite::Phirv => vec![Box::new(move || phirv_checks(&cfg, &sys))],
        Suite::Vanish | Suite::Leading => cfg
            .degree_vectors()
            .into_iter()
            .map(|k| {
                let (cfg, sys) = (cfg.clone(), sys.clone());
                Box::new(move || pbwd_checks(&cfg, &sys, &k)) as Batch
            })
            .collect(),
        Suite::Dims => vec![Box::new(move || dims_checks(&cfg, &sys))],
        Suite::Lusztig | Suite::Rtt => vec![Box::new(move || membership_checks(&cfg, &sys))],
        Suite::YangianRelations => vec![Box::new(move || yangian_relation_checks(&cfg, &sys))],
        Suite::YangianLeading => vec![Box::new(move || yangian_leading_checks(&cfg, &sys))],
        Suite::YangianGood | Suite::YangianIntegral => vec![Box::new(move || yangian_monomial_checks(&cfg, &sys))],
    }
}

fn trig_algebra(cfg: &SuiteConfig, sys: &Sys) -> Arc<ShuffleAlgebra<Trig>> {
    Arc::new(ShuffleAlgebra::new(sys.clone()).strict(cfg.strict))
}

fn rat_algebra(cfg: &SuiteConfig, sys: &Sys) -> Arc<ShuffleAlgebra<Rat>> {
    Arc::new(ShuffleAlgebra::new(sys.clone()).strict(cfg.strict))
}

/// `(name, expression)` for every quadratic and Serre relation with modes in
/// the window.
fn relation_list<E>(
    sys: &RootSystem,
    modes: RangeInclusive<i32>,
    quadratic: impl Fn(usize, usize, i32, i32) -> E,
    serre: impl Fn(usize, usize, &[i32], i32) -> E,
) -> Vec<(String, E)> {
    let mut out = Vec::new();
    for i in 1..=sys.n {
        for j in 1..=sys.n {
            for (r, s) in modes.clone().cartesian_product(modes.clone()) {
                out.push((format!("quadratic i={i} j={j} r={r} s={s}"), quadratic(i, j, r, s)));
            }
            if i != j && sys.a(i, j) != 0 {
                let m = (1 - sys.a(i, j)) as usize;
                for rs in (0..m).map(|_| modes.clone()).multi_cartesian_product() {
                    for s in modes.clone() {
                        out.push((format!("serre i={i} j={j} r={rs:?} s={s}"), serre(i, j, &rs, s)));
                    }
                }
            }
        }
    }
    out
}

fn relation_checks(cfg: &SuiteConfig, sys: &Sys) -> Vec<Check> {
    let alg = trig_algebra(cfg, sys);
    relation_list(sys, cfg.modes(), |i, j, r, s| relations::quadratic(sys, i, j, r, s), |i, j, rs, s| relations::serre(sys, i, j, rs, s))
        .into_iter()
        .map(|(name, e): (String, TrigExpr)| {
            let alg = alg.clone();
            Check::new(name, move || {
                let f = alg.psi(&e).map_err(fail_on)?;
                if f.is_zero() {
                    Ok(())
                } else {
                    Err(format!("image {f}"))
                }
            })
        })
        .collect()
}

fn yangian_relation_checks(cfg: &SuiteConfig, sys: &Sys) -> Vec<Check> {
    let alg = rat_algebra(cfg, sys);
    relation_list(sys, cfg.modes(), |i, j, r, s| yangian::quadratic(sys, i, j, r, s), |i, j, rs, s| yangian::serre(sys, i, j, rs, s))
        .into_iter()
        .map(|(name, e): (String, RatExpr)| {
            let alg = alg.clone();
            Check::new(name, move || {
                let f = alg.psi(&e).map_err(fail_on)?;
                if f.is_zero() {
                    Ok(())
                } else {
                    Err(format!("image {f}"))
                }
            })
        })
        .collect()
}

fn psirv_checks(cfg: &SuiteConfig, sys: &Sys) -> Vec<Check> {
    let alg = trig_algebra(cfg, sys);
    let mut out = Vec::new();
    for r in sys.roots() {
        let per_color: Vec<Vec<i32>> =
            (0..sys.n).map(|c| if r.nu[c] > 0 { cfg.modes().collect() } else { vec![0] }).collect();
        for modes in per_color.into_iter().multi_cartesian_product() {
            for sign in [Sign::Plus, Sign::Minus] {
                let (alg, sys, root) = (alg.clone(), sys.clone(), r.index);
                let modes2 = modes.clone();
                out.push(Check::new(format!("{} sign={sign} modes={modes:?}", r.label()), move || {
                    let spec = RootVectorSpec::tilde(&sys, root, &modes2, sign).map_err(fail_on)?;
                    let got = alg.psi(&root_vector(&sys, &spec).map_err(fail_on)?).map_err(fail_on)?;
                    let want = closed_form(&sys, root, &modes2, sign).map_err(fail_on)?.to_element();
                    match got.proportional(&want) {
                        Some(_) => Ok(()),
                        None => Err(format!("image {got} is not proportional to {want}")),
                    }
                }));
            }
        }
    }
    out
}

fn phirv_checks(cfg: &SuiteConfig, sys: &Sys) -> Vec<Check> {
    let alg = trig_algebra(cfg, sys);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for r in sys.roots() {
        for s in cfg.modes() {
            for t in 0..cfg.samples {
                let spec = match RootVectorSpec::random(sys, r.index, s, 1, &mut rng) {
                    Ok(spec) => spec,
                    Err(e) => {
                        out.push(Check::new(format!("{} s={s}", r.label()), move || Err(fail_on(&e))));
                        continue;
                    }
                };
                let (alg, sys) = (alg.clone(), sys.clone());
                out.push(Check::new(format!("{} #{t}", spec.describe(&sys)), move || {
                    let r = sys.root(spec.root);
                    let f = alg.psi(&root_vector(&sys, &spec).map_err(fail_on)?).map_err(fail_on)?;
                    let img = phi_d(&sys, &f, &KostantPartition::single(&sys, r.index, 1)).map_err(fail_on)?;
                    let want = SpecImage::<Trig> {
                        poly: SparsePoly::term(Mono::var(VarId::w(r.index, 1), spec.mode() + kappa(&sys, r)), c_beta(&sys, r)),
                        den: LaurentZ::one(),
                    };
                    if img.proportional(&want) {
                        Ok(())
                    } else {
                        Err(format!("image {img}, expected a multiple of {}", want.poly))
                    }
                }));
            }
        }
    }
    out
}

fn pbwd_checks(cfg: &SuiteConfig, sys: &Sys, k: &[u32]) -> Vec<Check> {
    let ev = Arc::new(MonomialEvaluator::tilde(sys.clone(), Sign::Plus));
    let groups: Arc<Vec<(KostantPartition, Vec<PbwdKey>)>> = Arc::new(pbwd_keys(sys, k, cfg.window));
    let kn = kname(k);
    let mut out = Vec::new();
    for pos in 0..groups.len() {
        let d = &groups[pos].0;
        if cfg.suite == Suite::Leading {
            let (ev, groups, sys) = (ev.clone(), groups.clone(), sys.clone());
            out.push(Check::new(format!("{kn} d={}", d.name(&sys)), move || {
                let rep = verify_leading_with(&ev, &groups[pos].1).map_err(fail_on)?;
                if rep.ok() {
                    Ok(())
                } else {
                    Err(rep.witness.unwrap_or_else(|| "leading identity fails".into()))
                }
            }));
            continue;
        }
        for idx in 0..groups[pos].1.len() {
            let (ev, groups, sys) = (ev.clone(), groups.clone(), sys.clone());
            let h = &groups[pos].1[idx];
            out.push(Check::new(format!("{kn} h={}", h.name(&sys)), move || {
                let h = &groups[pos].1[idx];
                for (dp, _) in &groups[..pos] {
                    if !verify_vanishing(&ev, h, dp).map_err(fail_on)? {
                        return Err(format!("nonzero image at d'={}", dp.name(&sys)));
                    }
                }
                Ok(())
            }));
        }
    }
    out
}

fn dims_checks(cfg: &SuiteConfig, sys: &Sys) -> Vec<Check> {
    let mut out = Vec::new();
    for k in cfg.degree_vectors() {
        for delta in cfg.degrees.clone() {
            let (sys, k2) = (sys.clone(), k.clone());
            out.push(Check::new(format!("{} delta={delta}", kname(&k)), move || {
                let rows = dim_report(&sys, &k2, delta..=delta, &DimSettings::default()).map_err(fail_on)?;
                match rows.iter().find(|r| !r.ok()) {
                    None => Ok(()),
                    Some(r) => Err(format!(
                        "wheel dimension {}, PBWD count {}, rank {:?}, contained {}",
                        r.wheel_dim, r.pbwd_count, r.psi_rank, r.contained
                    )),
                }
            }));
        }
    }
    out
}

/// Products of at most two `(root, mode, p)` factors with `|k|` within
/// `max_k`.
fn factor_products(cfg: &SuiteConfig, sys: &RootSystem, ps: &[u32]) -> Vec<Vec<(usize, i32, u32)>> {
    let fs: Vec<(usize, i32, u32)> = sys
        .roots()
        .iter()
        .flat_map(|r| cfg.modes().cartesian_product(ps.iter().copied()).map(move |(m, p)| (r.index, m, p)))
        .collect();
    let size = |f: &(usize, i32, u32)| sys.root(f.0).height() as u32 * f.2;
    let mut out: Vec<Vec<_>> = fs.iter().filter(|f| size(f) <= cfg.max_k).map(|f| vec![*f]).collect();
    for (a, b) in fs.iter().cartesian_product(fs.iter()) {
        if size(a) + size(b) <= cfg.max_k {
            out.push(vec![*a, *b]);
        }
    }
    out
}

fn membership_checks(cfg: &SuiteConfig, sys: &Sys) -> Vec<Check> {
    let alg = trig_algebra(cfg, sys);
    let lusztig = cfg.suite == Suite::Lusztig;
    let ps: &[u32] = if lusztig { &[1, 2] } else { &[1] };
    factor_products(cfg, sys, ps)
        .into_iter()
        .map(|prod| {
            let name = prod
                .iter()
                .map(|&(r, m, p)| if lusztig { format!("{}^({p})_{m}", sys.root(r).label()) } else { format!("{}_{m}", sys.root(r).label()) })
                .join("*");
            let (alg, sys) = (alg.clone(), sys.clone());
            Check::new(name, move || {
                let mut items = Vec::new();
                for &(r, m, p) in &prod {
                    let spec = RootVectorSpec::tilde_canonical(&sys, r, m, Sign::Plus).map_err(fail_on)?;
                    items.push(if lusztig { divided_power(&sys, &spec, p) } else { rtt_root_vector(&sys, &spec) }.map_err(fail_on)?);
                }
                let f = alg.psi(&TrigExpr::prod(items)).map_err(fail_on)?;
                let m = if lusztig { lusztig_member(&sys, &f) } else { rtt_member(&sys, &f) }.map_err(fail_on)?;
                if m.member {
                    Ok(())
                } else {
                    Err(format!("{}: {}", m.condition.unwrap_or_default(), m.witness.unwrap_or_default()))
                }
            })
        })
        .collect()
}

fn yangian_leading_checks(cfg: &SuiteConfig, sys: &Sys) -> Vec<Check> {
    let alg = rat_algebra(cfg, sys);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for r in sys.roots() {
        for s in cfg.modes() {
            let (alg2, sys2, root) = (alg.clone(), sys.clone(), r.index);
            out.push(Check::new(format!("{} s={s} closed form", r.label()), move || {
                let got = alg2.psi(&yangian::yangian_tilde(&sys2, root, s).map_err(fail_on)?).map_err(fail_on)?;
                let want = yangian::yangian_closed_form(&sys2, root, s).map_err(fail_on)?;
                match got.proportional(&want) {
                    Some(_) => Ok(()),
                    None => Err(format!("image {got} is not proportional to {want}")),
                }
            }));
            for t in 0..cfg.samples {
                let mut parts = vec![0; r.word.len()];
                for _ in 0..s {
                    let p = rng.gen_range(0..parts.len());
                    parts[p] += 1;
                }
                let (alg, sys) = (alg.clone(), sys.clone());
                out.push(Check::new(format!("{} parts={parts:?} #{t}", r.label()), move || {
                    let f = alg.psi(&yangian::yangian_root_vector(&sys, root, &parts).map_err(fail_on)?).map_err(fail_on)?;
                    let shape = yangian::leading_shape(&sys, root, s, &f).map_err(fail_on)?;
                    if shape.ok() {
                        Ok(())
                    } else {
                        Err(format!(
                            "valuation {:?} (want {}), degree {:?} (want {s}), monic {}",
                            shape.valuation, shape.kappa, shape.degree, shape.monic
                        ))
                    }
                }));
            }
        }
    }
    out
}

fn yangian_monomial_checks(cfg: &SuiteConfig, sys: &Sys) -> Vec<Check> {
    let alg = rat_algebra(cfg, sys);
    let scaled = cfg.suite == Suite::YangianIntegral;
    let mut out = Vec::new();
    for k in cfg.degree_vectors() {
        for (_, keys) in pbwd_keys(sys, &k, cfg.window) {
            for h in keys {
                let (alg, sys) = (alg.clone(), sys.clone());
                out.push(Check::new(format!("{} h={}", kname(&k), h.name(&sys)), move || {
                    let f = alg.psi(&yangian::yangian_monomial(&sys, &h, scaled).map_err(fail_on)?).map_err(fail_on)?;
                    let m = if scaled { yangian::is_integral(&sys, &f) } else { yangian::is_good(&sys, &f) }.map_err(fail_on)?;
                    if m.member {
                        Ok(())
                    } else {
                        Err(format!("{}: {}", m.condition.unwrap_or_default(), m.witness.unwrap_or_default()))
                    }
                }));
            }
        }
    }
    out
}
