//! Seeded cross-checks of the closed forms against the tableau oracle.
//!
//! Each scope draws `count` instances from its own generator stream and runs
//! a fixed list of properties on every instance. Reports contain no timing
//! or other run-dependent data, so equal inputs give byte-identical output.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::base_cover::{
    base_product, base_skew, cover_product, cover_skew, durfee_schubert, union_partition,
};
use crate::error::{Error, Result};
use crate::gen::{self, InstanceRng};
use crate::lr::{Decomposition, Oracle, DEFAULT_MAX_BOXES};
use crate::partition::{partitions_of, Partition};
use crate::skew::SkewShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Thm34,
    Thm42,
    Thm43,
    Thm45,
    Symmetries,
    All,
}

impl Scope {
    pub const EACH: [Scope; 5] = [
        Scope::Thm34,
        Scope::Thm42,
        Scope::Thm43,
        Scope::Thm45,
        Scope::Symmetries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Thm34 => "thm34",
            Scope::Thm42 => "thm42",
            Scope::Thm43 => "thm43",
            Scope::Thm45 => "thm45",
            Scope::Symmetries => "symmetries",
            Scope::All => "all",
        }
    }

    fn stream(self) -> u64 {
        match self {
            Scope::Thm34 => 34,
            Scope::Thm42 => 42,
            Scope::Thm43 => 43,
            Scope::Thm45 => 45,
            Scope::Symmetries => 7,
            Scope::All => 0,
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scope::EACH
            .into_iter()
            .chain([Scope::All])
            .find(|scope| scope.name() == s)
            .ok_or_else(|| Error::parse(s, "unknown scope"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub max_boxes: usize,
    pub seed: u64,
    pub count: usize,
}

/// Outcome of one property over all instances of a scope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

impl PropertyResult {
    fn new(name: &str) -> Self {
        PropertyResult {
            name: name.to_string(),
            checked: 0,
            failed: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, instance: &dyn fmt::Display, outcome: Result<Option<String>>) {
        self.checked += 1;
        let problem = match outcome {
            Ok(None) => return,
            Ok(Some(mismatch)) => mismatch,
            Err(e) => format!("{}: {e}", e.name()),
        };
        self.failed += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(format!("{instance}: {problem}"));
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub scope: Scope,
    pub config: VerifyConfig,
    pub properties: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "verify {} max_boxes={} seed={} count={}",
            self.scope, c.max_boxes, c.seed, c.count
        )?;
        for p in &self.properties {
            if p.passed() {
                writeln!(f, "PASS {} ({} checks)", p.name, p.checked)?;
            } else {
                writeln!(f, "FAIL {} ({} of {} checks failed)", p.name, p.failed, p.checked)?;
                if let Some(ce) = &p.counterexample {
                    writeln!(f, "  first counterexample: {ce}")?;
                }
            }
        }
        let failed = self.properties.iter().filter(|p| !p.passed()).count();
        writeln!(f, "{} passed, {} failed", self.properties.len() - failed, failed)
    }
}

fn mismatch<T: PartialEq + fmt::Debug>(what: &str, left: &T, right: &T) -> Option<String> {
    (left != right).then(|| format!("{what}: {left:?} != {right:?}"))
}

/// Runs every property of `scope` on `config.count` seeded instances.
pub fn verify(scope: Scope, config: VerifyConfig) -> Result<Report> {
    if config.max_boxes > DEFAULT_MAX_BOXES {
        return Err(Error::InstanceTooLarge {
            boxes: config.max_boxes,
            limit: DEFAULT_MAX_BOXES,
        });
    }
    let scopes: Vec<Scope> = match scope {
        Scope::All => Scope::EACH.to_vec(),
        s => vec![s],
    };
    let mut properties = Vec::new();
    for s in scopes {
        let mut rng = gen::rng_for(config.seed, s.stream());
        let oracle = Oracle::new();
        let run = match s {
            Scope::Thm34 => thm34,
            Scope::Thm42 => thm42,
            Scope::Thm43 => thm43,
            Scope::Thm45 => thm45,
            Scope::Symmetries => symmetries,
            Scope::All => unreachable!(),
        };
        properties.extend(run(&oracle, &mut rng, config));
    }
    Ok(Report {
        scope,
        config,
        properties,
    })
}

fn thm34(oracle: &Oracle, rng: &mut InstanceRng, config: VerifyConfig) -> Vec<PropertyResult> {
    let mut union = PropertyResult::new("thm34.base_equals_union");
    let mut oracle_base = PropertyResult::new("thm34.base_equals_oracle");
    let mut rho = PropertyResult::new("thm34.rho_max_equals_base");
    let mut sandwich = PropertyResult::new("thm34.base_below_constituents");
    for _ in 0..config.count {
        let a = gen::skew_shape(rng, config.max_boxes);
        let base = base_skew(&a);
        let d = oracle.decompose(&a);
        union.record(&a, (|| Ok(mismatch("union vs base", &union_partition(&a)?, &base.clone()?)))());
        oracle_base.record(&a, (|| Ok(mismatch("oracle vs base", &d.clone()?.base()?, &base.clone()?)))());
        rho.record(
            &a,
            (|| {
                let base = base.clone()?;
                let maxima: Vec<usize> = (1..=a.num_rows())
                    .map(|i| a.rho(i).first().copied().unwrap_or(0))
                    .collect();
                let expected: Vec<usize> = (0..a.num_rows()).map(|i| base.part(i)).collect();
                Ok(mismatch("max rho vs base", &maxima, &expected))
            })(),
        );
        sandwich.record(
            &a,
            (|| {
                let base = base.clone()?;
                Ok(d.clone()?
                    .constituents()
                    .find(|nu| !nu.contains(&base))
                    .map(|nu| format!("constituent {nu} does not contain base {base}")))
            })(),
        );
    }
    vec![union, oracle_base, rho, sandwich]
}

fn thm42(oracle: &Oracle, rng: &mut InstanceRng, config: VerifyConfig) -> Vec<PropertyResult> {
    let mut duality = PropertyResult::new("thm42.skew_equals_complemented_schubert");
    for _ in 0..config.count {
        let rect = gen::rectangle(rng, config.max_boxes);
        let lambda = gen::partition(rng, rect.width(), rect.height());
        let mu = gen::sub_partition(rng, &lambda);
        let instance = format!("lambda={lambda} mu={mu} rect={rect}");
        duality.record(
            &instance,
            (|| {
                let shape = SkewShape::new(lambda.clone(), mu.clone())?;
                let lambda_dual = lambda.complement_in(rect)?;
                let skew = oracle.decompose(&shape)?;
                let dual = oracle
                    .schubert_product(&mu, &lambda_dual, rect)?
                    .map_constituents(|a| a.complement_in(rect).expect("constituents fit"))?;
                Ok(mismatch("skew vs complemented product", &skew, &dual))
            })(),
        );
    }
    vec![duality]
}

fn thm43(oracle: &Oracle, rng: &mut InstanceRng, config: VerifyConfig) -> Vec<PropertyResult> {
    let mut ordinary_cover = PropertyResult::new("thm43.ordinary_cover_equals_oracle");
    let mut ordinary_base = PropertyResult::new("thm43.ordinary_base_equals_oracle");
    let mut schubert_cover = PropertyResult::new("thm43.schubert_cover_equals_oracle");
    let mut schubert_durfee = PropertyResult::new("thm43.schubert_durfee_equals_oracle");
    for _ in 0..config.count {
        let (mu, nu) = gen::factor_pair(rng, config.max_boxes);
        let instance = format!("mu={mu} nu={nu}");
        let d = oracle.outer_product(&mu, &nu);
        ordinary_cover.record(
            &instance,
            (|| Ok(mismatch("cover", &cover_product(&mu, &nu, None)?, &d.clone()?.cover()?)))(),
        );
        ordinary_base.record(
            &instance,
            (|| Ok(mismatch("base", &base_product(&mu, &nu), &d.clone()?.base()?)))(),
        );

        let rect = gen::rectangle(rng, config.max_boxes);
        let (mu, nu) = gen::schubert_factors(rng, rect);
        let instance = format!("mu={mu} nu={nu} rect={rect}");
        let d = oracle.schubert_product(&mu, &nu, rect);
        schubert_cover.record(
            &instance,
            (|| {
                let d = d.clone()?;
                Ok(match cover_product(&mu, &nu, Some(rect)) {
                    Ok(c) => mismatch("cover", &c, &d.cover()?),
                    Err(Error::OverlappingBlocks { .. }) if d.is_empty() => None,
                    Err(Error::OverlappingBlocks { .. }) => {
                        Some(format!("blocks overlap but product has {} terms", d.len()))
                    }
                    Err(e) => return Err(e),
                })
            })(),
        );
        schubert_durfee.record(
            &instance,
            (|| {
                let d = d.clone()?;
                if d.is_empty() {
                    return Ok(None);
                }
                Ok(mismatch("durfee", &durfee_schubert(&mu, &nu, rect)?, &d.durfee()))
            })(),
        );
    }
    vec![ordinary_cover, ordinary_base, schubert_cover, schubert_durfee]
}

fn thm45(oracle: &Oracle, rng: &mut InstanceRng, config: VerifyConfig) -> Vec<PropertyResult> {
    let mut cover = PropertyResult::new("thm45.skew_cover_equals_oracle");
    let mut sandwich = PropertyResult::new("thm45.constituents_between_base_and_cover");
    for _ in 0..config.count {
        let a = gen::constrained_skew(rng, config.max_boxes);
        let d = oracle.decompose(&a);
        cover.record(&a, (|| Ok(mismatch("cover", &cover_skew(&a)?, &d.clone()?.cover()?)))());
        sandwich.record(
            &a,
            (|| {
                let (lo, hi) = (base_skew(&a)?, cover_skew(&a)?);
                Ok(d.clone()?
                    .constituents()
                    .find(|nu| !(nu.contains(&lo) && hi.contains(nu)))
                    .map(|nu| format!("constituent {nu} outside [{lo}, {hi}]")))
            })(),
        );
    }
    vec![cover, sandwich]
}

fn conjugated(d: &Decomposition) -> Result<Decomposition> {
    d.map_constituents(Partition::conjugate)
}

/// `outer/inner` moved down by `rows` and right by `cols`, without
/// canonicalising.
fn translated(a: &SkewShape, rows: usize, cols: usize) -> (Partition, Partition) {
    let top = a.outer().first() + cols;
    let shift = |p: &Partition| -> Vec<usize> {
        std::iter::repeat(top)
            .take(rows)
            .chain((0..a.num_rows()).map(|i| p.part(i) + cols))
            .collect()
    };
    (
        Partition::new(shift(a.outer())).expect("still decreasing"),
        Partition::new(shift(a.inner())).expect("still decreasing"),
    )
}

fn symmetries(oracle: &Oracle, rng: &mut InstanceRng, config: VerifyConfig) -> Vec<PropertyResult> {
    use rand::Rng;

    let mut commutativity = PropertyResult::new("symmetries.commutativity");
    let mut conjugation = PropertyResult::new("symmetries.conjugation");
    let mut rotation = PropertyResult::new("symmetries.rotation");
    let mut translation = PropertyResult::new("symmetries.translation");
    for _ in 0..config.count {
        let a = gen::skew_shape(rng, config.max_boxes);
        let (rows, cols) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let d = oracle.decompose(&a);
        commutativity.record(
            &a,
            (|| {
                let d = d.clone()?;
                for nu in partitions_of(a.size()) {
                    let swapped = oracle.lr_coefficient(a.outer(), &nu, a.inner())?;
                    if let Some(m) = mismatch(&format!("c(lambda; nu, mu) for nu={nu}"), &swapped, &d.get(&nu)) {
                        return Ok(Some(m));
                    }
                }
                Ok(None)
            })(),
        );
        conjugation.record(
            &a,
            (|| Ok(mismatch("conjugate", &oracle.decompose(&a.conjugate())?, &conjugated(&d.clone()?)?)))(),
        );
        rotation.record(
            &a,
            (|| Ok(mismatch("rotated", &oracle.decompose(&a.rotate())?, &d.clone()?)))(),
        );
        translation.record(
            &format!("{a} shifted by {rows} rows, {cols} cols"),
            (|| {
                let (outer, inner) = translated(&a, rows, cols);
                for nu in partitions_of(a.size()) {
                    let moved = oracle.lr_coefficient(&outer, &inner, &nu)?;
                    let fixed = oracle.lr_coefficient(a.outer(), a.inner(), &nu)?;
                    if let Some(m) = mismatch(&format!("coefficient of {nu}"), &moved, &fixed) {
                        return Ok(Some(m));
                    }
                }
                Ok(None)
            })(),
        );
    }
    vec![commutativity, conjugation, rotation, translation]
}
