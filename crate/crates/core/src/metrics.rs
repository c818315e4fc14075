//! Evaluation statistics over confusion matrices: MCC, macro-averaged
//! F1, micro-averaged F1 in two forms, accuracy, ECE, and Fleiss' kappa.
//!
//! Two micro-F1 variants are computed side by side and labeled
//! unambiguously everywhere they are reported:
//!
//! - `paper_micro`: support-weighted pooling, `MicroP = Σ TPᵢ·nᵢ / Σ
//!   (TPᵢ+FPᵢ)·nᵢ` (and the analogous recall), combined harmonically.
//! - `standard_micro`: plain pooled counts, which for single-label
//!   multi-class classification equals accuracy exactly.
//!
//! Macro-F1 is the harmonic mean of macro-averaged precision and recall,
//! not the mean of per-class F1 scores; the two differ in general.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    #[error("prediction and gold sequences differ in length ({preds} vs {golds})")]
    LengthMismatch { preds: usize, golds: usize },
    #[error("label {label} out of range for {classes} classes")]
    LabelOutOfRange { label: usize, classes: usize },
    #[error("empty input sequence")]
    Empty,
    #[error("support vector has {got} entries, expected {expected}")]
    SupportMismatch { got: usize, expected: usize },
    #[error("item {item} has {got} ratings, expected {expected}")]
    RaggedRatings { item: usize, got: usize, expected: usize },
    #[error("Fleiss' kappa needs at least 2 items and 2 raters per item")]
    TooFewRatings,
    #[error("bin count must be at least 1")]
    ZeroBins,
    #[error("record {index} has an empty or non-finite probability vector")]
    BadProbabilities { index: usize },
}

// ─── Confusion matrix ────────────────────────────────────────────────────────

/// K×K counts with `get(i, j)` = examples of gold class `i` predicted as
/// class `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    classes: usize,
    counts: Vec<u64>,
}

impl ConfusionMatrix {
    pub fn new(classes: usize) -> Self {
        ConfusionMatrix { classes, counts: vec![0; classes * classes] }
    }

    /// Tallies exact counts from parallel gold/prediction sequences.
    pub fn from_labels(golds: &[usize], preds: &[usize], classes: usize) -> Result<Self, MetricsError> {
        if golds.len() != preds.len() {
            return Err(MetricsError::LengthMismatch { preds: preds.len(), golds: golds.len() });
        }
        if golds.is_empty() {
            return Err(MetricsError::Empty);
        }
        let mut m = ConfusionMatrix::new(classes);
        for (&g, &p) in golds.iter().zip(preds) {
            for label in [g, p] {
                if label >= classes {
                    return Err(MetricsError::LabelOutOfRange { label, classes });
                }
            }
            m.counts[g * classes + p] += 1;
        }
        Ok(m)
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn get(&self, gold: usize, pred: usize) -> u64 {
        self.counts[gold * self.classes + pred]
    }

    pub fn add(&mut self, gold: usize, pred: usize) {
        self.counts[gold * self.classes + pred] += 1;
    }

    pub fn true_positives(&self, class: usize) -> u64 {
        self.get(class, class)
    }

    /// Column total minus the diagonal: predicted as `class` but gold differs.
    pub fn false_positives(&self, class: usize) -> u64 {
        self.predicted_count(class) - self.true_positives(class)
    }

    /// Row total minus the diagonal: gold `class` predicted as something else.
    pub fn false_negatives(&self, class: usize) -> u64 {
        self.support(class) - self.true_positives(class)
    }

    pub fn true_negatives(&self, class: usize) -> u64 {
        self.total() - self.true_positives(class) - self.false_positives(class)
            - self.false_negatives(class)
    }

    /// Gold occurrences of `class` (row sum).
    pub fn support(&self, class: usize) -> u64 {
        (0..self.classes).map(|j| self.get(class, j)).sum()
    }

    /// Predicted occurrences of `class` (column sum).
    pub fn predicted_count(&self, class: usize) -> u64 {
        (0..self.classes).map(|i| self.get(i, class)).sum()
    }

    pub fn supports(&self) -> Vec<u64> {
        (0..self.classes).map(|k| self.support(k)).collect()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn correct(&self) -> u64 {
        (0..self.classes).map(|k| self.get(k, k)).sum()
    }

    pub fn accuracy(&self) -> f64 {
        let total = self.total();
        if total == 0 {
            return 0.0;
        }
        self.correct() as f64 / total as f64
    }

    pub fn transpose(&self) -> Self {
        let mut t = ConfusionMatrix::new(self.classes);
        for i in 0..self.classes {
            for j in 0..self.classes {
                t.counts[j * self.classes + i] = self.get(i, j);
            }
        }
        t
    }
}

// ─── Macro scores ────────────────────────────────────────────────────────────

/// Macro-averaged precision/recall and their harmonic mean.
/// `undefined_ratios` counts per-class 0/0 ratios that were treated as 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MacroScores {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub undefined_ratios: usize,
}

fn ratio_or_zero(num: u64, den: u64, warnings: &mut usize) -> f64 {
    if den == 0 {
        *warnings += 1;
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn harmonic(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

pub fn macro_scores(c: &ConfusionMatrix) -> MacroScores {
    let k = c.classes();
    let mut undefined = 0;
    let mut p_sum = 0.0;
    let mut r_sum = 0.0;
    for class in 0..k {
        let tp = c.true_positives(class);
        p_sum += ratio_or_zero(tp, tp + c.false_positives(class), &mut undefined);
        r_sum += ratio_or_zero(tp, tp + c.false_negatives(class), &mut undefined);
    }
    let precision = p_sum / k as f64;
    let recall = r_sum / k as f64;
    MacroScores { precision, recall, f1: harmonic(precision, recall), undefined_ratios: undefined }
}

// ─── Micro scores ────────────────────────────────────────────────────────────

/// Support-weighted micro scores. `zero_denominators` counts pooled
/// denominators that were zero (score reported as 0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MicroScores {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub zero_denominators: usize,
}

/// The support-weighted micro formulas, with `supports[i]` the gold count
/// of class `i`.
pub fn paper_micro_scores(c: &ConfusionMatrix, supports: &[u64]) -> Result<MicroScores, MetricsError> {
    let k = c.classes();
    if supports.len() != k {
        return Err(MetricsError::SupportMismatch { got: supports.len(), expected: k });
    }
    let mut tp_weighted = 0.0;
    let mut p_den = 0.0;
    let mut r_den = 0.0;
    for class in 0..k {
        let n = supports[class] as f64;
        let tp = c.true_positives(class) as f64;
        tp_weighted += tp * n;
        p_den += (tp + c.false_positives(class) as f64) * n;
        r_den += (tp + c.false_negatives(class) as f64) * n;
    }
    let mut zero_denominators = 0;
    let mut safe_div = |num: f64, den: f64| {
        if den == 0.0 {
            zero_denominators += 1;
            0.0
        } else {
            num / den
        }
    };
    let precision = safe_div(tp_weighted, p_den);
    let recall = safe_div(tp_weighted, r_den);
    Ok(MicroScores { precision, recall, f1: harmonic(precision, recall), zero_denominators })
}

/// Pooled micro-F1. For single-label multi-class predictions the pooled
/// precision, recall, and F1 all collapse to accuracy.
pub fn standard_micro_f1(c: &ConfusionMatrix) -> f64 {
    c.accuracy()
}

// ─── MCC ─────────────────────────────────────────────────────────────────────

/// Multi-class Matthews correlation from the confusion matrix:
/// `(c·s − Σ pₖtₖ) / √((s² − Σ pₖ²)(s² − Σ tₖ²))` with the convention
/// that a zero denominator yields 0.
pub fn mcc(c: &ConfusionMatrix) -> f64 {
    let k = c.classes();
    let correct = c.correct() as f64;
    let total = c.total() as f64;
    let mut pt = 0.0;
    let mut pp = 0.0;
    let mut tt = 0.0;
    for class in 0..k {
        let t = c.support(class) as f64;
        let p = c.predicted_count(class) as f64;
        pt += p * t;
        pp += p * p;
        tt += t * t;
    }
    let denom = ((total * total - pp) * (total * total - tt)).sqrt();
    if denom == 0.0 {
        0.0
    } else {
        (correct * total - pt) / denom
    }
}

// ─── ECE ─────────────────────────────────────────────────────────────────────

/// Expected Calibration Error over `bins` equal-width confidence bins.
///
/// Confidence is the max probability; bins partition (0, 1] left-open
/// right-closed, so a boundary value `i/M` falls in bin `i`. Empty bins
/// contribute zero.
pub fn ece(probs: &[Vec<f64>], golds: &[usize], bins: usize) -> Result<f64, MetricsError> {
    if bins == 0 {
        return Err(MetricsError::ZeroBins);
    }
    if probs.len() != golds.len() {
        return Err(MetricsError::LengthMismatch { preds: probs.len(), golds: golds.len() });
    }
    if probs.is_empty() {
        return Err(MetricsError::Empty);
    }
    let mut bin_count = vec![0u64; bins];
    let mut bin_conf = vec![0.0f64; bins];
    let mut bin_correct = vec![0u64; bins];
    for (index, (p, &gold)) in probs.iter().zip(golds).enumerate() {
        if p.is_empty() || p.iter().any(|v| !v.is_finite()) {
            return Err(MetricsError::BadProbabilities { index });
        }
        let (argmax, confidence) = p
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, v)| if v > best.1 { (i, v) } else { best });
        let bin = ((confidence * bins as f64).ceil() as usize).clamp(1, bins) - 1;
        bin_count[bin] += 1;
        bin_conf[bin] += confidence;
        bin_correct[bin] += u64::from(argmax == gold);
    }
    let n = probs.len() as f64;
    let mut total = 0.0;
    for bin in 0..bins {
        if bin_count[bin] == 0 {
            continue;
        }
        let count = bin_count[bin] as f64;
        let acc = bin_correct[bin] as f64 / count;
        let conf = bin_conf[bin] / count;
        total += count / n * (acc - conf).abs();
    }
    Ok(total)
}

// ─── Fleiss' kappa ───────────────────────────────────────────────────────────

/// Fleiss' kappa over `items[i][j]` = category assigned to item `i` by
/// rater `j`. Every item must carry the same number of ratings.
///
/// When expected chance agreement is 1 (every rating in the whole table is
/// the same category), agreement is necessarily perfect and kappa is
/// defined as 1.
pub fn fleiss_kappa(items: &[Vec<usize>]) -> Result<f64, MetricsError> {
    if items.len() < 2 {
        return Err(MetricsError::TooFewRatings);
    }
    let raters = items[0].len();
    if raters < 2 {
        return Err(MetricsError::TooFewRatings);
    }
    for (item, ratings) in items.iter().enumerate() {
        if ratings.len() != raters {
            return Err(MetricsError::RaggedRatings { item, got: ratings.len(), expected: raters });
        }
    }
    let categories = items.iter().flatten().max().map_or(0, |&m| m + 1);
    let n = raters as f64;
    let mut category_totals = vec![0u64; categories];
    let mut agreement_sum = 0.0;
    for ratings in items {
        let mut counts = vec![0u64; categories];
        for &r in ratings {
            counts[r] += 1;
            category_totals[r] += 1;
        }
        let sq: u64 = counts.iter().map(|&c| c * c).sum();
        agreement_sum += (sq as f64 - n) / (n * (n - 1.0));
    }
    let p_bar = agreement_sum / items.len() as f64;
    let total_ratings = (items.len() * raters) as f64;
    let p_expected: f64 =
        category_totals.iter().map(|&c| (c as f64 / total_ratings).powi(2)).sum();
    if (1.0 - p_expected).abs() < 1e-12 {
        return Ok(1.0);
    }
    Ok((p_bar - p_expected) / (1.0 - p_expected))
}

// ─── Report bundle ───────────────────────────────────────────────────────────

/// All confusion-matrix statistics for one task.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskMetrics {
    pub mcc: f64,
    pub macro_precision: f64,
    pub macro_recall: f64,
    pub macro_f1: f64,
    pub paper_micro_precision: f64,
    pub paper_micro_recall: f64,
    pub paper_micro_f1: f64,
    pub standard_micro_f1: f64,
    pub accuracy: f64,
    pub per_class_f1: Vec<f64>,
    pub support: Vec<u64>,
    pub undefined_ratio_warnings: usize,
}

impl TaskMetrics {
    pub fn from_confusion(c: &ConfusionMatrix) -> Self {
        let macro_s = macro_scores(c);
        let supports = c.supports();
        let micro = paper_micro_scores(c, &supports).expect("supports derived from the matrix");
        let mut per_class_f1 = Vec::with_capacity(c.classes());
        for class in 0..c.classes() {
            let tp = c.true_positives(class) as f64;
            let fp = c.false_positives(class) as f64;
            let fn_ = c.false_negatives(class) as f64;
            let den = 2.0 * tp + fp + fn_;
            per_class_f1.push(if den == 0.0 { 0.0 } else { 2.0 * tp / den });
        }
        TaskMetrics {
            mcc: mcc(c),
            macro_precision: macro_s.precision,
            macro_recall: macro_s.recall,
            macro_f1: macro_s.f1,
            paper_micro_precision: micro.precision,
            paper_micro_recall: micro.recall,
            paper_micro_f1: micro.f1,
            standard_micro_f1: standard_micro_f1(c),
            accuracy: c.accuracy(),
            per_class_f1,
            support: supports,
            undefined_ratio_warnings: macro_s.undefined_ratios + micro.zero_denominators,
        }
    }

    pub fn from_labels(golds: &[usize], preds: &[usize], classes: usize) -> Result<Self, MetricsError> {
        Ok(Self::from_confusion(&ConfusionMatrix::from_labels(golds, preds, classes)?))
    }
}
