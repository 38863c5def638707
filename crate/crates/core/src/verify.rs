//! Exhaustive checks of the spectral criticality thresholds at small orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::criticality::{
    check_theorem_hypotheses, is_k_factor_critical_by_definition, is_k_factor_critical_by_favaron, Certificate,
    CertificateKind, CriticalityVerdict, CRITICALITY_GUARD,
};
use crate::enumerate::{enumerate_connected_graphs, ENUMERATION_GUARD};
use crate::error::{Error, Result};
use crate::families::{
    extremal_for, extremal_k_plus_8, threshold, FamilyGraph, Regime, ThresholdSpec,
};
use crate::format::{decode_graph6_lines, encode_graph6, StreamIssue};
use crate::graph::Graph;
use crate::spectral::{
    quotient_spectral_radius, spectral_radius, COMPARE_TOLERANCE, COMPUTE_TOLERANCE,
};

/// Default margin for the strict comparison `ρ > threshold`.
pub const DEFAULT_MARGIN: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceKind {
    BuiltinEnumeration,
    ExternalStream,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: usize,
    pub k: usize,
    pub source: SourceKind,
    pub margin: f64,
}

impl SweepConfig {
    pub fn builtin(n: usize, k: usize) -> Self {
        SweepConfig { n, k, source: SourceKind::BuiltinEnumeration, margin: DEFAULT_MARGIN }
    }

    pub fn stream(n: usize, k: usize) -> Self {
        SweepConfig { n, k, source: SourceKind::ExternalStream, margin: DEFAULT_MARGIN }
    }

    fn validate(&self) -> Result<()> {
        let guard = match self.source {
            SourceKind::BuiltinEnumeration => ENUMERATION_GUARD,
            SourceKind::ExternalStream => CRITICALITY_GUARD,
        };
        if self.n > guard {
            return Err(Error::GuardExceeded { what: "sweep", n: self.n, guard });
        }
        if self.margin.is_nan() || self.margin < 0.0 {
            return Err(Error::InvalidParameter(format!("margin {} must be nonnegative", self.margin)));
        }
        Ok(())
    }
}

/// Where a graph's spectral radius sits relative to the threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Placement {
    Above,
    At,
    Below,
}

/// One analysed graph of a sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub kappa: usize,
    pub rho: f64,
    pub threshold: f64,
    pub hypotheses_ok: bool,
    pub placement: Placement,
    /// Present only when the hypotheses hold.
    pub verdict: Option<CriticalityVerdict>,
}

impl GraphRecord {
    pub fn verdict_label(&self) -> &'static str {
        match &self.verdict {
            None => "not_eligible",
            Some(v) if v.is_critical => "critical",
            Some(_) => "not_critical",
        }
    }

    fn witness(&self) -> Witness {
        Witness {
            graph6: self.graph6.clone(),
            rho: self.rho,
            threshold: self.threshold,
            distance: (self.rho - self.threshold).abs(),
            critical: self.verdict.as_ref().is_some_and(|v| v.is_critical),
            certificate: self.verdict.as_ref().and_then(|v| v.certificate.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub graph6: String,
    pub rho: f64,
    pub threshold: f64,
    pub distance: f64,
    pub critical: bool,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdEcho {
    pub regime: Regime,
    pub value: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub scanned: usize,
    pub hypothesis_passed: usize,
    pub above_threshold: usize,
    pub at_threshold: usize,
    /// Critical graphs among those above the threshold.
    pub critical: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: SweepConfig,
    pub threshold: ThresholdEcho,
    pub totals: Totals,
    pub theorem_holds: bool,
    pub counterexamples: Vec<Witness>,
    /// Eligible graphs within `margin` of the threshold, logged as found.
    pub at_threshold: Vec<Witness>,
    pub closest_above: Option<Witness>,
    pub closest_below: Option<Witness>,
    /// The eligible non-critical graph with the largest spectral radius.
    pub sharp_witness: Option<Witness>,
    pub stream_issues: Vec<StreamIssue>,
}

/// A sweep's report plus the per-graph records behind it.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutcome {
    pub report: VerificationReport,
    pub records: Vec<GraphRecord>,
}

fn analyse(g: &Graph, k: usize, spec: &ThresholdSpec, margin: f64) -> Result<GraphRecord> {
    let hyp = check_theorem_hypotheses(g, k);
    let rho = spectral_radius(g, COMPUTE_TOLERANCE)?;
    let placement = if rho > spec.value + margin {
        Placement::Above
    } else if rho >= spec.value - margin {
        Placement::At
    } else {
        Placement::Below
    };
    let verdict = if hyp.all() { Some(is_k_factor_critical_by_favaron(g, k)?) } else { None };
    Ok(GraphRecord {
        graph6: encode_graph6(g)?,
        n: g.order(),
        kappa: hyp.connectivity,
        rho,
        threshold: spec.value,
        hypotheses_ok: hyp.all(),
        placement,
        verdict,
    })
}

#[cfg(feature = "parallel")]
fn analyse_all(graphs: &[Graph], k: usize, spec: &ThresholdSpec, margin: f64) -> Result<Vec<GraphRecord>> {
    use rayon::prelude::*;
    graphs.par_iter().map(|g| analyse(g, k, spec, margin)).collect()
}

#[cfg(not(feature = "parallel"))]
fn analyse_all(graphs: &[Graph], k: usize, spec: &ThresholdSpec, margin: f64) -> Result<Vec<GraphRecord>> {
    graphs.iter().map(|g| analyse(g, k, spec, margin)).collect()
}

fn by_rho(a: &&GraphRecord, b: &&GraphRecord) -> Ordering {
    a.rho.total_cmp(&b.rho).then_with(|| b.graph6.cmp(&a.graph6))
}

fn summarize(cfg: &SweepConfig, spec: &ThresholdSpec, mut records: Vec<GraphRecord>, issues: Vec<StreamIssue>) -> SweepOutcome {
    records.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let eligible: Vec<&GraphRecord> = records.iter().filter(|r| r.hypotheses_ok).collect();
    let above: Vec<&GraphRecord> = eligible.iter().copied().filter(|r| r.placement == Placement::Above).collect();
    let critical_above = above.iter().filter(|r| r.verdict.as_ref().is_some_and(|v| v.is_critical)).count();

    let counterexamples: Vec<Witness> = above
        .iter()
        .filter(|r| r.verdict.as_ref().is_some_and(|v| !v.is_critical))
        .map(|r| r.witness())
        .collect();
    let at_threshold: Vec<Witness> =
        eligible.iter().filter(|r| r.placement == Placement::At).map(|r| r.witness()).collect();
    // ties go to the lexicographically smallest graph6
    let closest_above = above.iter().copied().max_by(|a, b| by_rho(b, a)).map(GraphRecord::witness);
    let closest_below = eligible
        .iter()
        .copied()
        .filter(|r| r.placement == Placement::Below)
        .max_by(by_rho)
        .map(GraphRecord::witness);
    let sharp_witness = eligible
        .iter()
        .copied()
        .filter(|r| r.verdict.as_ref().is_some_and(|v| !v.is_critical))
        .max_by(by_rho)
        .map(GraphRecord::witness);

    let report = VerificationReport {
        config: cfg.clone(),
        threshold: ThresholdEcho { regime: spec.regime, value: spec.value },
        totals: Totals {
            scanned: records.len(),
            hypothesis_passed: eligible.len(),
            above_threshold: above.len(),
            at_threshold: at_threshold.len(),
            critical: critical_above,
        },
        theorem_holds: counterexamples.is_empty(),
        counterexamples,
        at_threshold,
        closest_above,
        closest_below,
        sharp_witness,
        stream_issues: issues,
    };
    SweepOutcome { report, records }
}

/// Sweeps every connected graph of order `cfg.n` from the built-in
/// enumeration.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    if cfg.source != SourceKind::BuiltinEnumeration {
        return Err(Error::InvalidParameter("external-stream sweeps need graph6 input".into()));
    }
    cfg.validate()?;
    let spec = threshold(cfg.n, cfg.k)?;
    let graphs = enumerate_connected_graphs(cfg.n)?;
    let records = analyse_all(&graphs, cfg.k, &spec, cfg.margin)?;
    Ok(summarize(cfg, &spec, records, Vec::new()))
}

/// Sweeps graphs read from graph6 text, one per line. Undecodable lines and
/// graphs of the wrong order are reported as stream issues.
pub fn run_sweep_stream(cfg: &SweepConfig, text: &str) -> Result<SweepOutcome> {
    if cfg.source != SourceKind::ExternalStream {
        return Err(Error::InvalidParameter("built-in sweeps take no input stream".into()));
    }
    cfg.validate()?;
    let spec = threshold(cfg.n, cfg.k)?;
    let (decoded, mut issues) = decode_graph6_lines(text);
    let mut graphs = Vec::with_capacity(decoded.len());
    for (line, g) in decoded {
        if g.order() == cfg.n {
            graphs.push(g);
        } else {
            issues.push(StreamIssue { line, message: format!("order {} differs from sweep order {}", g.order(), cfg.n) });
        }
    }
    issues.sort_by_key(|i| i.line);
    let records = analyse_all(&graphs, cfg.k, &spec, cfg.margin)?;
    Ok(summarize(cfg, &spec, records, issues))
}

/// Facts about one attaining graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalFacts {
    pub name: String,
    pub graph6: String,
    pub rho: f64,
    pub quotient_rho: f64,
    pub reference: f64,
    pub distance: f64,
    pub non_critical: bool,
    pub certificate: Option<Certificate>,
    pub certificate_valid: bool,
    pub connectivity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SharpnessRecord {
    pub n: usize,
    pub k: usize,
    pub regime: Regime,
    pub threshold: f64,
    pub extremal: ExtremalFacts,
    pub attains_threshold: bool,
    pub eligible: bool,
    /// For `(k, n) = (0, 8)` only: `K₃ ∨ 5K₁` against
    /// `(k + 2 + √(k² + 24k + 64)) / 2`.
    pub companion: Option<ExtremalFacts>,
    /// Failed checks, empty when sharpness is confirmed.
    pub findings: Vec<String>,
}

impl SharpnessRecord {
    pub fn confirmed(&self) -> bool {
        self.findings.is_empty()
    }
}

/// The separating set the construction exhibits: the middle clique of the
/// three-block graphs, the clique of the two-block graphs.
fn structural_certificate(fam: &FamilyGraph) -> Certificate {
    let blocks = fam.partition.blocks();
    let witness = if blocks.len() == 3 { blocks[1] } else { blocks[0] };
    let odd = fam.graph.odd_components_without(witness);
    Certificate { kind: CertificateKind::ViolatingSet, witness, odd_components: Some(odd) }
}

fn extremal_facts(fam: &FamilyGraph, k: usize, reference: f64) -> Result<ExtremalFacts> {
    let g = &fam.graph;
    let rho = spectral_radius(g, COMPUTE_TOLERANCE)?;
    let quotient_rho = quotient_spectral_radius(g, &fam.partition)?;
    let certificate = if g.order() <= CRITICALITY_GUARD {
        is_k_factor_critical_by_favaron(g, k)?.certificate
    } else {
        Some(structural_certificate(fam))
    };
    let certificate_valid = certificate.as_ref().is_some_and(|c| c.is_valid_for(g, k));
    Ok(ExtremalFacts {
        name: fam.name.clone(),
        graph6: encode_graph6(g)?,
        rho,
        quotient_rho,
        reference,
        distance: (rho - reference).abs(),
        non_critical: certificate.is_some(),
        certificate,
        certificate_valid,
        connectivity: g.vertex_connectivity(),
    })
}

/// Builds the attaining graph for `(n, k)` and checks that its spectral
/// radius equals the threshold, that it is not k-factor-critical, and that
/// it satisfies the connectivity hypothesis.
pub fn verify_sharpness(n: usize, k: usize) -> Result<SharpnessRecord> {
    let spec = threshold(n, k)?;
    let fam = extremal_for(n, k)?;
    let extremal = extremal_facts(&fam, k, spec.value)?;

    let mut findings = Vec::new();
    let attains_threshold = extremal.distance < COMPARE_TOLERANCE;
    if !attains_threshold {
        findings.push(format!("rho {} differs from threshold {} by {:e}", extremal.rho, spec.value, extremal.distance));
    }
    if (extremal.quotient_rho - extremal.rho).abs() >= COMPARE_TOLERANCE {
        findings.push(format!("quotient radius {} differs from rho {}", extremal.quotient_rho, extremal.rho));
    }
    if !extremal.non_critical {
        findings.push(format!("{} is {k}-factor-critical", extremal.name));
    } else if !extremal.certificate_valid {
        findings.push("non-criticality certificate does not re-validate".into());
    }
    let eligible = extremal.connectivity > k;
    if !eligible {
        findings.push(format!("connectivity {} is below k + 1 = {}", extremal.connectivity, k + 1));
    }

    let companion = if (k, n) == (0, 8) {
        let kf = k as f64;
        let closed = (kf + 2.0 + (kf * kf + 24.0 * kf + 64.0).sqrt()) / 2.0;
        Some(extremal_facts(&extremal_k_plus_8(k), k, closed)?)
    } else {
        None
    };

    Ok(SharpnessRecord {
        n,
        k,
        regime: spec.regime,
        threshold: spec.value,
        extremal,
        attains_threshold,
        eligible,
        companion,
        findings,
    })
}

/// Everything the toolkit can say about a single graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphAnalysis {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub rho: f64,
    pub kappa: usize,
    pub k: Option<usize>,
    pub threshold: Option<ThresholdEcho>,
    pub by_definition: Option<CriticalityVerdict>,
    pub by_favaron: Option<CriticalityVerdict>,
}

impl GraphAnalysis {
    /// The two deciders' answers, if both ran.
    pub fn agree(&self) -> Option<bool> {
        Some(self.by_definition.as_ref()?.is_critical == self.by_favaron.as_ref()?.is_critical)
    }
}

/// Spectral radius and connectivity of `g`; with `k`, both criticality
/// verdicts and, when defined, the threshold for `(n, k)`.
pub fn analyze_graph(g: &Graph, k: Option<usize>) -> Result<GraphAnalysis> {
    let (by_definition, by_favaron, threshold_echo) = match k {
        Some(k) => (
            Some(is_k_factor_critical_by_definition(g, k)?),
            Some(is_k_factor_critical_by_favaron(g, k)?),
            threshold(g.order(), k).ok().map(|t| ThresholdEcho { regime: t.regime, value: t.value }),
        ),
        None => (None, None, None),
    };
    Ok(GraphAnalysis {
        graph6: encode_graph6(g)?,
        n: g.order(),
        edges: g.edge_count(),
        rho: spectral_radius(g, COMPUTE_TOLERANCE)?,
        kappa: g.vertex_connectivity(),
        k,
        threshold: threshold_echo,
        by_definition,
        by_favaron,
    })
}
