//! Canonical label sets for the two classification tasks, label-pair
//! validity, and cross-dataset label conversion.
//!
//! The canonical scheme places `no` in the presence task and `irrelevant`
//! in the period task. A [`LabelScheme`] remap is available for users who
//! prefer the alternate naming that swaps the two.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Errors raised by label parsing and conversion.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TaxonomyError {
    #[error("unknown presence label '{0}'")]
    UnknownPresence(String),
    #[error("unknown period label '{0}'")]
    UnknownPeriod(String),
    #[error("unknown SBDH category '{0}'")]
    UnknownCategory(String),
    #[error("unknown source label '{0}' (expected one of Present, Past, Never, Unsure, None)")]
    UnknownSourceLabel(String),
}

// ─── Presence task ───────────────────────────────────────────────────────────

/// Eviction-presence class. Integer codes follow declaration order, 0..=5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresenceLabel {
    No,
    Present,
    Absent,
    Uncertain,
    Pending,
    MutualRescission,
}

impl PresenceLabel {
    pub const ALL: [PresenceLabel; 6] = [
        PresenceLabel::No,
        PresenceLabel::Present,
        PresenceLabel::Absent,
        PresenceLabel::Uncertain,
        PresenceLabel::Pending,
        PresenceLabel::MutualRescission,
    ];

    pub const COUNT: usize = 6;

    pub fn code(self) -> usize {
        self as usize
    }

    pub fn from_code(code: usize) -> Option<Self> {
        Self::ALL.get(code).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            PresenceLabel::No => "no",
            PresenceLabel::Present => "present",
            PresenceLabel::Absent => "absent",
            PresenceLabel::Uncertain => "uncertain",
            PresenceLabel::Pending => "pending",
            PresenceLabel::MutualRescission => "mutual_rescission",
        }
    }

    pub fn parse(name: &str) -> Result<Self, TaxonomyError> {
        Self::ALL
            .iter()
            .copied()
            .find(|l| l.name() == name)
            .ok_or_else(|| TaxonomyError::UnknownPresence(name.to_string()))
    }
}

impl fmt::Display for PresenceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ─── Period task ─────────────────────────────────────────────────────────────

/// Eviction-period class. Integer codes follow declaration order, 0..=4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PeriodLabel {
    Future,
    Irrelevant,
    Current,
    Uncertain,
    History,
}

impl PeriodLabel {
    pub const ALL: [PeriodLabel; 5] = [
        PeriodLabel::Future,
        PeriodLabel::Irrelevant,
        PeriodLabel::Current,
        PeriodLabel::Uncertain,
        PeriodLabel::History,
    ];

    pub const COUNT: usize = 5;

    pub fn code(self) -> usize {
        self as usize
    }

    pub fn from_code(code: usize) -> Option<Self> {
        Self::ALL.get(code).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            PeriodLabel::Future => "future",
            PeriodLabel::Irrelevant => "irrelevant",
            PeriodLabel::Current => "current",
            PeriodLabel::Uncertain => "uncertain",
            PeriodLabel::History => "history",
        }
    }

    pub fn parse(name: &str) -> Result<Self, TaxonomyError> {
        Self::ALL
            .iter()
            .copied()
            .find(|l| l.name() == name)
            .ok_or_else(|| TaxonomyError::UnknownPeriod(name.to_string()))
    }
}

impl fmt::Display for PeriodLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ─── Label pair and scheme ───────────────────────────────────────────────────

/// The joint gold (or predicted) label for one example: one class per task.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LabelPair {
    pub presence: PresenceLabel,
    pub period: PeriodLabel,
}

impl LabelPair {
    pub fn new(period: PeriodLabel, presence: PresenceLabel) -> Self {
        LabelPair { presence, period }
    }
}

impl fmt::Display for LabelPair {
    /// Formats as `period/presence`, the order used in annotation guides.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.period, self.presence)
    }
}

/// Naming scheme for file formats and CLI output.
///
/// `Table` is canonical: `no` is a presence class and `irrelevant` a period
/// class. `Prose` swaps the two names (presence `no` renders as
/// `irrelevant`, period `irrelevant` renders as `no`); class identity and
/// integer codes are unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelScheme {
    #[default]
    Table,
    Prose,
}

impl LabelScheme {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "table" => Some(LabelScheme::Table),
            "prose" => Some(LabelScheme::Prose),
            _ => None,
        }
    }

    pub fn presence_name(self, label: PresenceLabel) -> &'static str {
        match (self, label) {
            (LabelScheme::Prose, PresenceLabel::No) => "irrelevant",
            _ => label.name(),
        }
    }

    pub fn period_name(self, label: PeriodLabel) -> &'static str {
        match (self, label) {
            (LabelScheme::Prose, PeriodLabel::Irrelevant) => "no",
            _ => label.name(),
        }
    }

    pub fn parse_presence(self, name: &str) -> Result<PresenceLabel, TaxonomyError> {
        match self {
            LabelScheme::Table => PresenceLabel::parse(name),
            LabelScheme::Prose => match name {
                "irrelevant" => Ok(PresenceLabel::No),
                "no" => Err(TaxonomyError::UnknownPresence(name.to_string())),
                other => PresenceLabel::parse(other),
            },
        }
    }

    pub fn parse_period(self, name: &str) -> Result<PeriodLabel, TaxonomyError> {
        match self {
            LabelScheme::Table => PeriodLabel::parse(name),
            LabelScheme::Prose => match name {
                "no" => Ok(PeriodLabel::Irrelevant),
                "irrelevant" => Err(TaxonomyError::UnknownPeriod(name.to_string())),
                other => PeriodLabel::parse(other),
            },
        }
    }
}

// ─── SBDH categories ─────────────────────────────────────────────────────────

/// The 13 social and behavioral determinant categories emitted by the
/// upstream tagging system. Declaration order is the canonical order used
/// everywhere tags are listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SbdhCategory {
    HousingInstability,
    FoodInsecurity,
    FinancialInsecurity,
    EmploymentInsecurity,
    LegalProblems,
    BarriersToCare,
    TransitionsOfCare,
    Pain,
    PatientDisability,
    SocialIsolation,
    PsychiatricSymptoms,
    SubstanceAbuse,
    SuicidalBehaviors,
}

impl SbdhCategory {
    pub const ALL: [SbdhCategory; 13] = [
        SbdhCategory::HousingInstability,
        SbdhCategory::FoodInsecurity,
        SbdhCategory::FinancialInsecurity,
        SbdhCategory::EmploymentInsecurity,
        SbdhCategory::LegalProblems,
        SbdhCategory::BarriersToCare,
        SbdhCategory::TransitionsOfCare,
        SbdhCategory::Pain,
        SbdhCategory::PatientDisability,
        SbdhCategory::SocialIsolation,
        SbdhCategory::PsychiatricSymptoms,
        SbdhCategory::SubstanceAbuse,
        SbdhCategory::SuicidalBehaviors,
    ];

    pub const COUNT: usize = 13;

    pub fn name(self) -> &'static str {
        match self {
            SbdhCategory::HousingInstability => "housing_instability",
            SbdhCategory::FoodInsecurity => "food_insecurity",
            SbdhCategory::FinancialInsecurity => "financial_insecurity",
            SbdhCategory::EmploymentInsecurity => "employment_insecurity",
            SbdhCategory::LegalProblems => "legal_problems",
            SbdhCategory::BarriersToCare => "barriers_to_care",
            SbdhCategory::TransitionsOfCare => "transitions_of_care",
            SbdhCategory::Pain => "pain",
            SbdhCategory::PatientDisability => "patient_disability",
            SbdhCategory::SocialIsolation => "social_isolation",
            SbdhCategory::PsychiatricSymptoms => "psychiatric_symptoms",
            SbdhCategory::SubstanceAbuse => "substance_abuse",
            SbdhCategory::SuicidalBehaviors => "suicidal_behaviors",
        }
    }

    pub fn parse(name: &str) -> Result<Self, TaxonomyError> {
        Self::ALL
            .iter()
            .copied()
            .find(|c| c.name() == name)
            .ok_or_else(|| TaxonomyError::UnknownCategory(name.to_string()))
    }
}

impl fmt::Display for SbdhCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ─── Pair validity ───────────────────────────────────────────────────────────

/// How to treat label pairs outside the observed combination whitelist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CombinationPolicy {
    Strict,
    #[default]
    Permissive,
}

/// Outcome of validating a label pair under a [`CombinationPolicy`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected,
    AcceptedWithWarning,
}

/// The pair combinations observed in the annotation guide, as
/// `period/presence`. Mutual-rescission mentions are annotated against the
/// current period.
pub const PAIR_WHITELIST: [LabelPair; 10] = [
    LabelPair { period: PeriodLabel::History, presence: PresenceLabel::Absent },
    LabelPair { period: PeriodLabel::History, presence: PresenceLabel::Present },
    LabelPair { period: PeriodLabel::History, presence: PresenceLabel::Uncertain },
    LabelPair { period: PeriodLabel::Current, presence: PresenceLabel::Absent },
    LabelPair { period: PeriodLabel::Current, presence: PresenceLabel::Present },
    LabelPair { period: PeriodLabel::Current, presence: PresenceLabel::Pending },
    LabelPair { period: PeriodLabel::Current, presence: PresenceLabel::Uncertain },
    LabelPair { period: PeriodLabel::Current, presence: PresenceLabel::MutualRescission },
    LabelPair { period: PeriodLabel::Future, presence: PresenceLabel::No },
    LabelPair { period: PeriodLabel::Irrelevant, presence: PresenceLabel::No },
];

pub fn is_whitelisted(pair: LabelPair) -> bool {
    PAIR_WHITELIST.contains(&pair)
}

/// Validates a pair against the whitelist. Strict mode rejects anything
/// off-list; permissive mode never rejects but flags off-list pairs so
/// callers can keep a warning count.
pub fn validate_pair(pair: LabelPair, policy: CombinationPolicy) -> Verdict {
    match (is_whitelisted(pair), policy) {
        (true, _) => Verdict::Accepted,
        (false, CombinationPolicy::Strict) => Verdict::Rejected,
        (false, CombinationPolicy::Permissive) => Verdict::AcceptedWithWarning,
    }
}

// ─── Task handles ────────────────────────────────────────────────────────────

/// Selects one of the two classification tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Presence,
    Period,
}

impl Task {
    pub fn class_count(self) -> usize {
        match self {
            Task::Presence => PresenceLabel::COUNT,
            Task::Period => PeriodLabel::COUNT,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Task::Presence => "presence",
            Task::Period => "period",
        }
    }
}

/// The stable `(name, code)` enumeration for a task.
pub fn label_codes(task: Task) -> Vec<(&'static str, usize)> {
    match task {
        Task::Presence => PresenceLabel::ALL.iter().map(|l| (l.name(), l.code())).collect(),
        Task::Period => PeriodLabel::ALL.iter().map(|l| (l.name(), l.code())).collect(),
    }
}

// ─── MIMIC-SBDH conversion ───────────────────────────────────────────────────

/// Presence analog produced by converting MIMIC-SBDH substance-use labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MimicPresence {
    None,
    Yes,
    No,
    Unsure,
}

/// Period analog produced by converting MIMIC-SBDH substance-use labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MimicPeriod {
    None,
    Current,
    Past,
    No,
    Unsure,
}

/// Converts a raw MIMIC-SBDH substance-use label (Present, Past, Never,
/// Unsure, None) into the two-task analog. Matching is case-insensitive;
/// anything else is an error naming the offending value.
pub fn convert_mimic_sbdh_label(raw: &str) -> Result<(MimicPresence, MimicPeriod), TaxonomyError> {
    match raw.to_ascii_lowercase().as_str() {
        "none" => Ok((MimicPresence::None, MimicPeriod::None)),
        "present" => Ok((MimicPresence::Yes, MimicPeriod::Current)),
        "past" => Ok((MimicPresence::Yes, MimicPeriod::Past)),
        "never" => Ok((MimicPresence::No, MimicPeriod::No)),
        "unsure" => Ok((MimicPresence::Unsure, MimicPeriod::Unsure)),
        _ => Err(TaxonomyError::UnknownSourceLabel(raw.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinalities_are_fixed() {
        assert_eq!(PresenceLabel::ALL.len(), 6);
        assert_eq!(PeriodLabel::ALL.len(), 5);
        assert_eq!(SbdhCategory::ALL.len(), 13);
    }

    #[test]
    fn codes_round_trip() {
        for label in PresenceLabel::ALL {
            assert_eq!(PresenceLabel::from_code(label.code()), Some(label));
            assert_eq!(PresenceLabel::parse(label.name()), Ok(label));
        }
        for label in PeriodLabel::ALL {
            assert_eq!(PeriodLabel::from_code(label.code()), Some(label));
            assert_eq!(PeriodLabel::parse(label.name()), Ok(label));
        }
    }

    #[test]
    fn label_codes_enumeration() {
        let presence = label_codes(Task::Presence);
        assert_eq!(presence.len(), 6);
        assert_eq!(presence[0], ("no", 0));
        let period = label_codes(Task::Period);
        assert_eq!(period.len(), 5);
        assert_eq!(period[4], ("history", 4));

        let mut codes: Vec<usize> = presence.iter().map(|&(_, c)| c).collect();
        codes.sort_unstable();
        assert_eq!(codes, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn validate_pair_examples() {
        let ok = LabelPair::new(PeriodLabel::Current, PresenceLabel::Present);
        assert_eq!(validate_pair(ok, CombinationPolicy::Strict), Verdict::Accepted);

        let off = LabelPair::new(PeriodLabel::History, PresenceLabel::MutualRescission);
        assert_eq!(validate_pair(off, CombinationPolicy::Strict), Verdict::Rejected);
        assert_eq!(
            validate_pair(off, CombinationPolicy::Permissive),
            Verdict::AcceptedWithWarning
        );
    }

    #[test]
    fn permissive_accepts_everything_strict_accepts() {
        for &presence in &PresenceLabel::ALL {
            for &period in &PeriodLabel::ALL {
                let pair = LabelPair { presence, period };
                let strict = validate_pair(pair, CombinationPolicy::Strict);
                let loose = validate_pair(pair, CombinationPolicy::Permissive);
                assert_ne!(loose, Verdict::Rejected);
                if strict == Verdict::Accepted {
                    assert_eq!(loose, Verdict::Accepted);
                }
            }
        }
    }

    #[test]
    fn mimic_conversion_table() {
        let cases = [
            ("None", (MimicPresence::None, MimicPeriod::None)),
            ("Present", (MimicPresence::Yes, MimicPeriod::Current)),
            ("Past", (MimicPresence::Yes, MimicPeriod::Past)),
            ("Never", (MimicPresence::No, MimicPeriod::No)),
            ("Unsure", (MimicPresence::Unsure, MimicPeriod::Unsure)),
        ];
        for (raw, expected) in cases {
            assert_eq!(convert_mimic_sbdh_label(raw).unwrap(), expected, "raw={raw}");
        }
    }

    #[test]
    fn mimic_conversion_outputs_distinct() {
        let outputs: Vec<_> = ["None", "Present", "Past", "Never", "Unsure"]
            .iter()
            .map(|raw| convert_mimic_sbdh_label(raw).unwrap())
            .collect();
        for i in 0..outputs.len() {
            for j in (i + 1)..outputs.len() {
                assert_ne!(outputs[i], outputs[j]);
            }
        }
    }

    #[test]
    fn mimic_conversion_rejects_unknown() {
        let err = convert_mimic_sbdh_label("Evicted").unwrap_err();
        assert!(err.to_string().contains("Evicted"));
    }

    #[test]
    fn prose_scheme_swaps_the_two_names() {
        assert_eq!(LabelScheme::Prose.presence_name(PresenceLabel::No), "irrelevant");
        assert_eq!(LabelScheme::Prose.period_name(PeriodLabel::Irrelevant), "no");
        assert_eq!(
            LabelScheme::Prose.parse_presence("irrelevant").unwrap(),
            PresenceLabel::No
        );
        assert_eq!(LabelScheme::Prose.parse_period("no").unwrap(), PeriodLabel::Irrelevant);
        assert!(LabelScheme::Prose.parse_presence("no").is_err());
        // All other names are untouched by the remap.
        assert_eq!(LabelScheme::Prose.parse_presence("pending").unwrap(), PresenceLabel::Pending);
        assert_eq!(LabelScheme::Table.presence_name(PresenceLabel::No), "no");
    }

    #[test]
    fn category_names_are_lowercase_underscore_and_unique() {
        let mut seen = std::collections::BTreeSet::new();
        for cat in SbdhCategory::ALL {
            let name = cat.name();
            assert!(name.chars().all(|c| c.is_ascii_lowercase() || c == '_'));
            assert!(seen.insert(name));
            assert_eq!(SbdhCategory::parse(name).unwrap(), cat);
        }
    }
}
