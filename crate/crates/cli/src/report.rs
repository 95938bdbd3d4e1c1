//! Artifact content builders. Every builder is a pure function of its
//! inputs with deterministic formatting: floats carry 17 significant digits
//! in CSV so values round-trip, and JSON objects serialize with sorted keys.

use std::fmt::Write as _;

use lexnet::fit::{BoundsReport, FitResult, LawReport, MeanIndependenceReport};
use lexnet::info::MIReport;
use lexnet::model::{self, JointDistribution};
use lexnet::walk::WalkCensus;
use serde_json::{json, Value};

use crate::config::WalkSettings;

/// 17 significant digits: enough for bit-exact f64 round trips.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn phi_label(phi: f64) -> String {
    format!("{phi}")
}

fn header(graph_id: &str, phi: Option<f64>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# graph = {graph_id}");
    if let Some(phi) = phi {
        let _ = writeln!(out, "# phi = {}", phi_label(phi));
        if model::phi_outside_discussed_range(phi) {
            let _ = writeln!(out, "# note: phi exceeds the discussed range [0, 2]");
        }
    }
    out
}

fn base_json(graph_id: &str, phi: Option<f64>) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("graph".into(), json!(graph_id));
    if let Some(phi) = phi {
        map.insert("phi".into(), json!(phi));
        if model::phi_outside_discussed_range(phi) {
            map.insert("phi_above_discussed_range".into(), json!(true));
        }
    }
    map
}

pub fn joint_sparse_csv(graph_id: &str, phi: Option<f64>, joint: &JointDistribution) -> String {
    let mut out = header(graph_id, phi);
    out.push_str("i,j,p\n");
    for (&(i, j), &p) in joint.edges().iter().zip(joint.probs()) {
        let _ = writeln!(out, "{i},{j},{}", float(p));
    }
    out
}

pub fn joint_dense_csv(graph_id: &str, phi: Option<f64>, joint: &JointDistribution) -> String {
    let mut out = header(graph_id, phi);
    let dense = joint.to_dense();
    for i in 0..dense.rows() {
        let row: Vec<String> = dense.row(i).iter().map(|&p| float(p)).collect();
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

pub fn joint_json(graph_id: &str, phi: Option<f64>, joint: &JointDistribution) -> Value {
    let mut map = base_json(graph_id, phi);
    map.insert("n".into(), json!(joint.n()));
    map.insert("m".into(), json!(joint.m()));
    map.insert("normalizer".into(), json!(joint.normalizer()));
    let entries: Vec<Value> = joint
        .edges()
        .iter()
        .zip(joint.probs())
        .map(|(&(i, j), &p)| json!({"i": i, "j": j, "p": p}))
        .collect();
    map.insert("entries".into(), json!(entries));
    Value::Object(map)
}

pub fn marginals_csv(graph_id: &str, phi: f64, joint: &JointDistribution) -> String {
    let mut out = header(graph_id, Some(phi));
    out.push_str("kind,index,p\n");
    for (i, p) in joint.word_marginal().into_iter().enumerate() {
        let _ = writeln!(out, "word,{i},{}", float(p));
    }
    for (j, p) in joint.meaning_marginal().into_iter().enumerate() {
        let _ = writeln!(out, "meaning,{j},{}", float(p));
    }
    out
}

pub fn marginals_json(graph_id: &str, phi: f64, joint: &JointDistribution) -> Value {
    let mut map = base_json(graph_id, Some(phi));
    map.insert("word".into(), json!(joint.word_marginal()));
    map.insert("meaning".into(), json!(joint.meaning_marginal()));
    Value::Object(map)
}

pub fn mi_csv(graph_id: &str, phi: f64, report: &MIReport) -> String {
    let bits = report.to_bits();
    let mut out = header(graph_id, Some(phi));
    out.push_str("key,value\n");
    let _ = writeln!(out, "log_base,nats");
    let _ = writeln!(out, "h_words,{}", float(report.h_words));
    let _ = writeln!(
        out,
        "h_words_given_meanings,{}",
        float(report.h_words_given_meanings)
    );
    let _ = writeln!(out, "mutual_info,{}", float(report.mutual_info));
    let _ = writeln!(out, "max_possible,{}", float(report.max_possible));
    let _ = writeln!(out, "is_maximal,{}", report.is_maximal);
    let _ = writeln!(out, "h_words_bits,{}", float(bits.h_words));
    let _ = writeln!(
        out,
        "h_words_given_meanings_bits,{}",
        float(bits.h_words_given_meanings)
    );
    let _ = writeln!(out, "mutual_info_bits,{}", float(bits.mutual_info));
    out
}

pub fn mi_json(graph_id: &str, phi: f64, report: &MIReport) -> Value {
    let mut map = base_json(graph_id, Some(phi));
    map.insert(
        "nats".into(),
        serde_json::to_value(report).expect("serialize"),
    );
    map.insert(
        "bits".into(),
        serde_json::to_value(report.to_bits()).expect("serialize"),
    );
    Value::Object(map)
}

fn fit_fields(out: &mut String, prefix: &str, fit: &FitResult) {
    let _ = writeln!(out, "{prefix}exponent,{}", float(fit.exponent));
    let _ = writeln!(out, "{prefix}intercept,{}", float(fit.intercept));
    let _ = writeln!(out, "{prefix}r_squared,{}", float(fit.r_squared));
    let _ = writeln!(out, "{prefix}point_count,{}", fit.point_count);
}

pub fn law_csv(graph_id: &str, phi: f64, report: &LawReport) -> String {
    let mut out = header(graph_id, Some(phi));
    out.push_str("key,value\n");
    let _ = writeln!(out, "graph,{graph_id}");
    let _ = writeln!(out, "phi,{}", phi_label(phi));
    let _ = writeln!(out, "delta_hat,{}", float(report.fit.exponent));
    let _ = writeln!(out, "predicted_delta,{}", float(report.predicted_delta));
    fit_fields(&mut out, "fit_", &report.fit);
    fit_fields(&mut out, "mirror_", &report.mirror_fit);
    bounds_fields(&mut out, &report.bounds);
    out
}

pub fn law_json(graph_id: &str, phi: f64, report: &LawReport) -> Value {
    let mut map = base_json(graph_id, Some(phi));
    map.insert(
        "report".into(),
        serde_json::to_value(report).expect("serialize"),
    );
    Value::Object(map)
}

/// Plot-ready two-column log-log points for the law fit: x is the word
/// probability, y the word degree.
pub fn law_points_csv(graph_id: &str, phi: f64, points: &[(f64, f64)]) -> String {
    let mut out = header(graph_id, Some(phi));
    out.push_str("log_x,log_y\n");
    for &(x, y) in points {
        let _ = writeln!(out, "{},{}", float(x.ln()), float(y.ln()));
    }
    out
}

fn bounds_fields(out: &mut String, bounds: &BoundsReport) {
    let _ = writeln!(out, "t_min,{}", float(bounds.t_min));
    let _ = writeln!(out, "t_max,{}", float(bounds.t_max));
    let _ = writeln!(out, "gap_ratio,{}", float(bounds.gap_ratio));
    let _ = writeln!(out, "delta,{}", float(bounds.delta));
    let _ = writeln!(out, "b1,{}", float(bounds.b1));
    let _ = writeln!(out, "b2,{}", float(bounds.b2));
    let _ = writeln!(out, "bounds_all_hold,{}", bounds.all_within());
}

pub fn bounds_csv(
    graph_id: &str,
    phi: f64,
    mu: &[usize],
    word_probs: &[f64],
    report: &BoundsReport,
) -> String {
    let mut out = header(graph_id, Some(phi));
    out.push_str("key,value\n");
    bounds_fields(&mut out, report);
    out.push_str("word,mu,p,lower,upper,within\n");
    for (i, ((&d, &p), &ok)) in mu
        .iter()
        .zip(word_probs)
        .zip(&report.word_within_bounds)
        .enumerate()
    {
        let scale = (d as f64).powf(1.0 / report.delta);
        let _ = writeln!(
            out,
            "{i},{d},{},{},{},{ok}",
            float(p),
            float(report.t_min * scale),
            float(report.t_max * scale),
        );
    }
    out
}

pub fn bounds_json(
    graph_id: &str,
    phi: f64,
    mu: &[usize],
    word_probs: &[f64],
    report: &BoundsReport,
) -> Value {
    let mut map = base_json(graph_id, Some(phi));
    map.insert(
        "report".into(),
        serde_json::to_value(report).expect("serialize"),
    );
    map.insert("mu".into(), json!(mu));
    map.insert("word_probabilities".into(), json!(word_probs));
    Value::Object(map)
}

pub fn mean_independence_csv(graph_id: &str, phi: f64, report: &MeanIndependenceReport) -> String {
    let mut out = header(graph_id, Some(phi));
    out.push_str("key,value\n");
    let _ = writeln!(
        out,
        "global_mean_omega_phi,{}",
        float(report.global_mean_omega_phi)
    );
    let _ = writeln!(out, "mean_independent,{}", report.mean_independent);
    let _ = writeln!(
        out,
        "law_holds,{}",
        report
            .law_holds
            .map_or_else(|| "NA".to_string(), |b| b.to_string())
    );
    out.push_str("mu,mean_omega_phi,mean_p,predicted_p\n");
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.mu,
            float(row.mean_omega_phi),
            float(row.mean_word_probability),
            float(row.predicted_word_probability),
        );
    }
    out
}

pub fn mean_independence_json(graph_id: &str, phi: f64, report: &MeanIndependenceReport) -> Value {
    let mut map = base_json(graph_id, Some(phi));
    map.insert(
        "report".into(),
        serde_json::to_value(report).expect("serialize"),
    );
    Value::Object(map)
}

pub struct CensusContext<'a> {
    pub graph_id: &'a str,
    pub phi: f64,
    pub settings: &'a WalkSettings,
    pub master_seed: u64,
    pub walk_seed: u64,
}

pub fn census_csv(ctx: &CensusContext<'_>, census: &WalkCensus) -> String {
    let mut out = header(ctx.graph_id, Some(ctx.phi));
    let _ = writeln!(out, "# steps = {}", ctx.settings.steps);
    let _ = writeln!(out, "# burn_in = {}", ctx.settings.burn_in());
    let _ = writeln!(out, "# chains = {}", ctx.settings.chains());
    let _ = writeln!(out, "# start = {}", ctx.settings.start().label());
    let _ = writeln!(out, "# master_seed = {}", ctx.master_seed);
    let _ = writeln!(out, "# walk_seed = {}", ctx.walk_seed);
    let _ = writeln!(out, "# recorded_steps = {}", census.recorded_steps);
    out.push_str("section,i,j,count\n");
    for (i, &c) in census.word_visits.iter().enumerate() {
        let _ = writeln!(out, "word_visits,{i},,{c}");
    }
    for (j, &c) in census.meaning_visits.iter().enumerate() {
        let _ = writeln!(out, "meaning_visits,,{j},{c}");
    }
    for (&(i, j), &c) in census.edges().iter().zip(&census.pair_transits) {
        let _ = writeln!(out, "pair_transits,{i},{j},{c}");
    }
    out
}

pub fn census_json(ctx: &CensusContext<'_>, census: &WalkCensus) -> Value {
    let mut map = base_json(ctx.graph_id, Some(ctx.phi));
    map.insert("steps".into(), json!(ctx.settings.steps));
    map.insert("burn_in".into(), json!(ctx.settings.burn_in()));
    map.insert("chains".into(), json!(ctx.settings.chains()));
    map.insert("start".into(), json!(ctx.settings.start().label()));
    map.insert("master_seed".into(), json!(ctx.master_seed));
    map.insert("walk_seed".into(), json!(ctx.walk_seed));
    map.insert("recorded_steps".into(), json!(census.recorded_steps));
    map.insert("word_visits".into(), json!(census.word_visits));
    map.insert("meaning_visits".into(), json!(census.meaning_visits));
    let transits: Vec<Value> = census
        .edges()
        .iter()
        .zip(&census.pair_transits)
        .map(|(&(i, j), &c)| json!({"i": i, "j": j, "count": c}))
        .collect();
    map.insert("pair_transits".into(), json!(transits));
    Value::Object(map)
}

pub fn zipf_chain_csv(alpha: f64, gamma: f64, rank_count: usize, fit: &FitResult) -> String {
    let mut out = String::from("key,value\n");
    let _ = writeln!(out, "alpha,{}", float(alpha));
    let _ = writeln!(out, "gamma,{}", float(gamma));
    let _ = writeln!(out, "rank_count,{rank_count}");
    let _ = writeln!(out, "delta_hat,{}", float(fit.exponent));
    fit_fields(&mut out, "fit_", fit);
    out
}

pub fn zipf_chain_json(alpha: f64, gamma: f64, rank_count: usize, fit: &FitResult) -> Value {
    json!({
        "alpha": alpha,
        "gamma": gamma,
        "rank_count": rank_count,
        "delta_hat": fit.exponent,
        "fit": serde_json::to_value(fit).expect("serialize"),
    })
}

/// One sweep row; `None` cells render as `NA` in CSV and `null` in JSON.
pub struct SweepRow {
    pub phi: f64,
    pub delta_hat: Option<f64>,
    pub gap_ratio: Option<f64>,
    pub mutual_info: Option<f64>,
    pub entropy_rate: Option<f64>,
}

fn opt_float(x: Option<f64>) -> String {
    x.map_or_else(|| "NA".to_string(), float)
}

pub fn sweep_csv(graph_id: &str, rows: &[SweepRow]) -> String {
    let mut out = header(graph_id, None);
    out.push_str("phi,delta_hat,gap_ratio,mutual_info_nats,entropy_rate_nats\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            phi_label(row.phi),
            opt_float(row.delta_hat),
            opt_float(row.gap_ratio),
            opt_float(row.mutual_info),
            opt_float(row.entropy_rate),
        );
    }
    out
}

pub fn sweep_json(graph_id: &str, rows: &[SweepRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "phi": r.phi,
                "delta_hat": r.delta_hat,
                "gap_ratio": r.gap_ratio,
                "mutual_info_nats": r.mutual_info,
                "entropy_rate_nats": r.entropy_rate,
            })
        })
        .collect();
    let mut map = base_json(graph_id, None);
    map.insert("rows".into(), json!(rows));
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_round_trips() {
        for x in [1.0 / 3.0, 0.1, 1e-17, 123456.789, f64::MIN_POSITIVE] {
            let s = float(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s}");
        }
    }

    #[test]
    fn phi_labels_are_compact() {
        assert_eq!(phi_label(0.0), "0");
        assert_eq!(phi_label(0.5), "0.5");
        assert_eq!(phi_label(2.0), "2");
    }

    #[test]
    fn sparse_csv_has_one_row_per_edge() {
        let g = lexnet::BipartiteGraph::new(2, 2, vec![(0, 0), (1, 1)]).unwrap();
        let joint = lexnet::model::joint_probability(&g, 1.0).unwrap();
        let csv = joint_sparse_csv("test", Some(1.0), &joint);
        let data_rows = csv.lines().filter(|l| !l.starts_with('#')).count();
        assert_eq!(data_rows, 1 + 2);
    }
}
