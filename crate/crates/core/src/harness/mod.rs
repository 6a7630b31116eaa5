//! Instance enumerators and the registry of named property suites.
//!
//! A theorem suite passes when no instance refutes its property. A boundary
//! suite additionally needs at least one instance outside the hypotheses on
//! which the conclusion really fails, so the hypotheses are shown to matter.

pub mod enumerate;
mod suites;

pub use enumerate::{enumerate_instances, InstanceKind, Instances};

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0xD0B0;

/// Witness records kept per suite; the count of all failures is separate.
pub const MAX_REPORTED_FAILURES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteKind {
    Theorem,
    Boundary,
}

/// What `max_size` bounds for a suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SizeMeaning {
    Points,
    Atoms,
    Samples,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SuiteSpec {
    pub name: &'static str,
    pub criterion: &'static str,
    pub anchor: &'static str,
    pub kind: SuiteKind,
    pub size: SizeMeaning,
    pub default_size: usize,
    pub size_limit: usize,
}

const fn spec(
    name: &'static str,
    criterion: &'static str,
    anchor: &'static str,
    kind: SuiteKind,
    size: SizeMeaning,
    default_size: usize,
    size_limit: usize,
) -> SuiteSpec {
    SuiteSpec { name, criterion, anchor, kind, size, default_size, size_limit }
}

use SizeMeaning::{Atoms, Points, Samples};
use SuiteKind::{Boundary, Theorem};

pub const SUITES: &[SuiteSpec] = &[
    spec("rc-boolean", "rc-boolean", "RC(X) is a Boolean algebra and F = cl(int F) on its carrier", Theorem, Points, 4, 4),
    spec("alexandroff-rho", "alexandroff-rho", "for closed irreducible p, H ↦ p(H) and K ↦ cl(p⁻¹(int K)) are inverse Boolean isomorphisms", Theorem, Points, 3, 3),
    spec("dense-re", "dense-re", "for dense Y ⊆ X, r(F) = F ∩ Y and e(G) = cl(G) are inverse Boolean isomorphisms", Theorem, Points, 4, 4),
    spec("contact-characterizations", "contact-characterizations", "a ⌢ b iff a clan contains both iff some u ⌢ v has a ∈ u and b ∈ v", Theorem, Atoms, 4, 5),
    spec("normality-boundary", "normality-boundary", "I5 iff the atom relation is diagonal; ultrafilter contact is an equivalence iff the atom relation is transitive", Boundary, Atoms, 4, 5),
    spec("finite-lca-boundary", "finite-lca-boundary", "BC1-BC3 hold iff the atom relation is diagonal and every element is bounded", Boundary, Atoms, 3, 4),
    spec("roeper-roundtrip", "roeper-roundtrip", "σ: X → BClust(RC(X)) is a bijection matching closed bases and τ is a CLCA isomorphism", Theorem, Points, 5, 5),
    spec("prop-4.1", "v-functor", "V(φ) = φ̌ satisfies CLC1-CLC5 for every Boolean morphism φ", Theorem, Atoms, 3, 3),
    spec("v-functor", "v-functor", "V(id) = id and V(ψ ∘ φ) = V(ψ) ⋄ V(φ)", Theorem, Atoms, 3, 3),
    spec("lemma-2.13", "v-functor", "φ(a*) ≤ φ(a)*, φ̌ ≤ φ, and b₁ ≪ a₁, b₂ ≪ a₂ bounded give φ(b₁ ∨ b₂) ≪ φ(a₁) ∨ φ(a₂)", Theorem, Atoms, 3, 3),
    spec("lemma-2.14a", "v-functor", "(ǧ ∘ f)̌ = (g ∘ f)̌ for arbitrary element functions f, g", Theorem, Samples, 1000, 1_000_000),
    spec("lemma-2.14b", "v-functor", "(g ∘ f̌)̌ = (g ∘ f)̌ for monotone element functions f, g", Theorem, Samples, 1000, 1_000_000),
    spec("round-idempotent", "v-functor", "(f̌)̌ = f̌ for every element function f", Theorem, Atoms, 3, 3),
    spec("uw-roundtrip", "uw-roundtrip", "U(W(L)) = L; W(U(o)) ≅ o through h_p; u ⌢_p v iff p(u) = p(v); p carries compact opens onto CR(Y)", Theorem, Atoms, 5, 5),
    spec("lemma-3.14", "lemma-3.14", "f = f₁ iff U(φ, g, f)̌ = U(ψ, g₁, f₁)̌", Theorem, Atoms, 3, 3),
    spec("thm-4.7-reconstruction", "thm-4.7-reconstruction", "every CLCA morphism α is φ̌ for a Boolean morphism φ rebuilt from α̂, and rebuilding from V(φ₀) gives φ ∽ φ₀", Theorem, Points, 4, 4),
    spec("cor-4.8", "thm-4.7-reconstruction", "γ_A(f_φ(y')) = α̂(γ_A'(y')) for every CLCA morphism α", Theorem, Atoms, 3, 3),
    spec("lemma-4.6", "lemma-4.6", "cl(g⁻¹(int p(G))) = ⋁{p'(cl(f⁻¹(int H))) | H ∈ CR(X), p(H) ⊆ int p(G)}", Theorem, Points, 3, 3),
    spec("interval-axioms", "interval-lca", "C1-C4, I1-I5 and BC1-BC3 on the rational-interval algebra", Theorem, Samples, 1000, 1_000_000),
    spec("lemma-2.6", "interval-lca", "A ∖ 𝔹 is a cluster of the Alexandroff extension and the only unbounded one", Theorem, Samples, 500, 1_000_000),
    spec("prop-3.12a-interval", "interval-lca", "ultrafilter contact is an equivalence on bounded ultrafilters", Theorem, Samples, 500, 1_000_000),
    spec("prop-3.12b-interval", "interval-lca", "b ∈ 𝔹 iff ε(b) ⊆ Z", Theorem, Samples, 500, 1_000_000),
    spec("lemma-4.4-interval", "interval-lca", "(x, s) ⌢ (y, t) iff x = y iff the clusters agree; γ(p(ε(a))) = τ(a)", Theorem, Samples, 500, 1_000_000),
    spec("prop-2.16-2.17-interval", "interval-lca", "a bounded cluster 𝔠_u has u containing a bounded element, and each member dominates a bounded member", Theorem, Samples, 200, 1_000_000),
    spec("fiber-2to1-interval", "interval-lca", "p_A has exactly two points over every rational", Theorem, Samples, 100, 1_000_000),
];

/// The acceptance criteria in order, each with the suites it comprises.
pub const CRITERIA: &[&str] = &[
    "rc-boolean",
    "alexandroff-rho",
    "dense-re",
    "contact-characterizations",
    "normality-boundary",
    "finite-lca-boundary",
    "roeper-roundtrip",
    "v-functor",
    "uw-roundtrip",
    "lemma-3.14",
    "thm-4.7-reconstruction",
    "lemma-4.6",
    "interval-lca",
];

pub fn suites_of(criterion: &str) -> Vec<&'static SuiteSpec> {
    SUITES.iter().filter(|s| s.criterion == criterion).collect()
}

pub fn find_suite(name: &str) -> Result<&'static SuiteSpec> {
    SUITES.iter().find(|s| s.name == name).ok_or_else(|| {
        let known: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
        Error::input(format!("unknown suite `{name}`; known suites: {}", known.join(", ")))
    })
}

fn ms<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub criterion: &'static str,
    pub anchor: &'static str,
    pub kind: SuiteKind,
    pub seed: u64,
    pub max_size: usize,
    pub pass: bool,
    pub instances_checked: u64,
    pub skipped: u64,
    pub failure_count: u64,
    pub failures: Vec<Value>,
    /// Instances outside the hypotheses on which the conclusion fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_witnesses: Option<u64>,
    #[serde(rename = "elapsed_ms", serialize_with = "ms")]
    pub elapsed: Duration,
    pub notes: Vec<String>,
}

/// Outcome of one instance check.
pub(crate) enum Outcome {
    Pass,
    Fail(Value),
    Skip,
}

impl Outcome {
    pub(crate) fn from_failure(f: Option<Value>) -> Outcome {
        f.map_or(Outcome::Pass, Outcome::Fail)
    }
}

#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub checked: u64,
    pub skipped: u64,
    pub failure_count: u64,
    pub failures: Vec<Value>,
    pub boundary: u64,
    pub notes: Vec<String>,
}

impl Tally {
    pub fn record(&mut self, r: Result<Outcome>) {
        match r {
            Ok(Outcome::Pass) => self.checked += 1,
            Ok(Outcome::Skip) => self.skipped += 1,
            Ok(Outcome::Fail(w)) => {
                self.checked += 1;
                self.fail(w);
            }
            Err(e) => {
                self.checked += 1;
                self.fail(json!({"error": e.to_string()}));
            }
        }
    }

    pub fn fail(&mut self, w: Value) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(w);
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.boundary += other.boundary;
        self.failure_count += other.failure_count;
        for w in other.failures {
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(w);
            }
        }
        self.notes.extend(other.notes);
        self
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

/// Run a check over every item in parallel, merging in input order.
pub(crate) fn sweep<T: Sync>(items: &[T], check: impl Fn(&T) -> Result<Outcome> + Sync) -> Tally {
    sweep_with(items, |x, t| {
        t.record(check(x));
        Ok(())
    })
}

/// Like [`sweep`], for checks that record several outcomes per item. An
/// error aborts the item and is recorded as a failure.
pub(crate) fn sweep_with<T: Sync>(items: &[T], check: impl Fn(&T, &mut Tally) -> Result<()> + Sync) -> Tally {
    items
        .par_iter()
        .map(|x| {
            let mut t = Tally::default();
            if let Err(e) = check(x, &mut t) {
                t.record(Err(e));
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// Run a registered suite. `max_size` defaults to the suite's own size and
/// bounds points, atoms or samples according to [`SuiteSpec::size`].
pub fn run_suite(name: &str, seed: u64, max_size: Option<usize>) -> Result<SuiteResult> {
    let s = find_suite(name)?;
    let size = max_size.unwrap_or(s.default_size);
    if size == 0 || size > s.size_limit {
        return Err(Error::input(format!(
            "suite `{name}` accepts sizes 1..={} ({:?}), got {size}",
            s.size_limit, s.size
        )));
    }
    let start = Instant::now();
    let t = suites::run(s.name, seed, size)?;
    let pass = t.failure_count == 0 && (s.kind == Theorem || t.boundary > 0);
    Ok(SuiteResult {
        suite: s.name,
        criterion: s.criterion,
        anchor: s.anchor,
        kind: s.kind,
        seed,
        max_size: size,
        pass,
        instances_checked: t.checked,
        skipped: t.skipped,
        failure_count: t.failure_count,
        failures: t.failures,
        boundary_witnesses: (s.kind == Boundary).then_some(t.boundary),
        elapsed: start.elapsed(),
        notes: t.notes,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub criterion: &'static str,
    pub pass: bool,
    pub suites: Vec<SuiteResult>,
}

/// Every suite of one criterion at its default size.
pub fn run_criterion(criterion: &str, seed: u64) -> Result<CriterionResult> {
    let name = CRITERIA
        .iter()
        .find(|&&c| c == criterion)
        .ok_or_else(|| Error::input(format!("unknown criterion `{criterion}`")))?;
    let suites = suites_of(name).iter().map(|s| run_suite(s.name, seed, None)).collect::<Result<Vec<_>>>()?;
    Ok(CriterionResult { criterion: name, pass: suites.iter().all(|s| s.pass), suites })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_covers_criteria() {
        for c in CRITERIA {
            assert!(!suites_of(c).is_empty(), "{c}");
        }
        for s in SUITES {
            assert!(CRITERIA.contains(&s.criterion));
            assert!(s.default_size <= s.size_limit);
        }
        assert!(matches!(run_suite("no-such", 0, None), Err(Error::Input(_))));
        assert!(matches!(run_suite("rc-boolean", 0, Some(9)), Err(Error::Input(_))));
    }
}
