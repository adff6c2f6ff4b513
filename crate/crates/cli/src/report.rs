//! The JSON report document emitted by `build` and `verify`.
//!
//! The document embeds the full serialized tower (so a `build` report can be
//! fed back to `verify --in`), the per-range verdicts and the witness
//! outcomes. Apart from `timingMs`, the document is a pure function of the
//! configuration: map keys are label texts and all collections are ordered.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use mysticum_core::serial::{
    counts, to_doc, FixedPartDoc, InterLayerDoc, LayerDoc, MultimysticumDoc,
};
use mysticum_core::{Multimysticum, RangeReport, VerifySummary, WitnessReport};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigEcho {
    pub command: String,
    pub params: Vec<String>,
    pub height: usize,
    pub depth: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MismatchDoc {
    pub index: usize,
    /// Missing when the element fell off its carrier entirely.
    pub found: Option<String>,
    pub expected: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RangeDoc {
    pub kind: String,
    pub label: String,
    pub requested_depth: usize,
    pub effective_depth: usize,
    pub coordinates: Vec<String>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<MismatchDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessDoc {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    /// Exact values backing the check, when the witness produces any
    /// (reciprocal pair sums, the harmonic coordinate).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub data: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub config: ConfigEcho,
    pub counts: BTreeMap<String, usize>,
    pub layers: Vec<LayerDoc>,
    pub interlayers: Vec<InterLayerDoc>,
    pub fixed_part: FixedPartDoc,
    pub ranges: Vec<RangeDoc>,
    pub witnesses: Vec<WitnessDoc>,
    /// `None` for bare builds, the aggregate verdict for `verify`.
    pub verdict: Option<bool>,
    pub timing_ms: Option<u128>,
}

impl ReportDocument {
    pub fn new(config: ConfigEcho, tower: &Multimysticum) -> Self {
        let doc = to_doc(tower);
        ReportDocument {
            config,
            counts: counts(tower),
            layers: doc.layers,
            interlayers: doc.interlayers,
            fixed_part: doc.fixed_part,
            ranges: Vec::new(),
            witnesses: Vec::new(),
            verdict: None,
            timing_ms: None,
        }
    }

    /// Reassembles the embedded tower document, e.g. to reload a report with
    /// `verify --in`.
    pub fn tower_doc(&self) -> MultimysticumDoc {
        MultimysticumDoc {
            params: self.config.params.clone(),
            height: self.layers.len().saturating_sub(1),
            fixed_part: self.fixed_part.clone(),
            layers: self.layers.clone(),
            interlayers: self.interlayers.clone(),
        }
    }

    pub fn attach_ranges(&mut self, summary: &VerifySummary) {
        self.ranges = summary.reports.iter().map(range_doc).collect();
    }

    pub fn attach_witnesses(&mut self, report: &WitnessReport) {
        self.witnesses = report
            .all()
            .iter()
            .map(|w| {
                let data = match w.name {
                    "linking-involution" => {
                        report.linking_sums.iter().map(|s| s.to_string()).collect()
                    }
                    "harmonic" => vec![report.harmonic_cross_ratio.to_string()],
                    _ => Vec::new(),
                };
                WitnessDoc {
                    name: w.name.to_string(),
                    pass: w.pass,
                    detail: w.detail.clone(),
                    data,
                }
            })
            .collect();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Short human-readable rendering for `--format text`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "command: {}\nparams: {}\nheight: {}\n",
            self.config.command,
            self.config.params.join(", "),
            self.config.height
        ));
        if let Some(depth) = self.config.depth {
            out.push_str(&format!("depth: {depth}\n"));
        }
        for (k, v) in &self.counts {
            out.push_str(&format!("count {k}: {v}\n"));
        }
        if !self.ranges.is_empty() {
            let passed = self.ranges.iter().filter(|r| r.verdict).count();
            out.push_str(&format!("ranges: {passed}/{} exact\n", self.ranges.len()));
            for r in self.ranges.iter().filter(|r| !r.verdict) {
                match &r.first_mismatch {
                    Some(mm) => out.push_str(&format!(
                        "  FAIL {} at index {}: found {} expected {}\n",
                        r.label,
                        mm.index,
                        mm.found.as_deref().unwrap_or("<off carrier>"),
                        mm.expected
                    )),
                    None => out.push_str(&format!("  FAIL {}\n", r.label)),
                }
            }
        }
        for w in &self.witnesses {
            out.push_str(&format!(
                "witness {}: {} ({})\n",
                w.name,
                if w.pass { "pass" } else { "FAIL" },
                w.detail
            ));
        }
        if let Some(v) = self.verdict {
            out.push_str(&format!("verdict: {}\n", if v { "pass" } else { "FAIL" }));
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("timing: {ms} ms\n"));
        }
        out
    }
}

fn range_doc(r: &RangeReport) -> RangeDoc {
    RangeDoc {
        kind: r.spec.kind().to_string(),
        label: r.spec.text(),
        requested_depth: r.requested_depth,
        effective_depth: r.effective_depth,
        coordinates: r.coordinates.iter().map(|c| c.to_string()).collect(),
        verdict: r.verdict,
        first_mismatch: r.first_mismatch.as_ref().map(|mm| MismatchDoc {
            index: mm.index,
            found: mm.found.as_ref().map(|v| v.to_string()),
            expected: mm.expected.to_string(),
        }),
    }
}
