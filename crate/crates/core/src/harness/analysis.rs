use std::sync::Arc;

use rayon::prelude::*;

use super::manifest::{CorpusEntry, Manifest};
use crate::caps::Caps;
use crate::classes::{hierarchy_report_with, ClassId, ClassReport, Classifier, Decision, Verdict};
use crate::error::{Error, Result};
use crate::field::factorize;
use crate::group::{Enumeration, Group, Subgroup};
use crate::structure::{is_solvable_in, normal_subgroups_in, sylow_shape_in, sylow_subgroup_in, SylowShape};

#[derive(Clone, Debug)]
pub struct SylowInfo {
    pub shape: SylowShape,
    pub subgroup: Subgroup,
    pub normal: bool,
}

/// `G/N` for one nontrivial proper normal subgroup, with its `A_pi` verdict.
#[derive(Clone, Debug)]
pub struct QuotientFact {
    pub normal: Subgroup,
    pub quotient: Group,
    pub a_pi: Decision,
}

/// Everything the checks read about one corpus group.
#[derive(Debug)]
pub struct GroupAnalysis {
    pub id: String,
    pub group: Group,
    pub caps: Caps,
    /// `None` when the group is too large to enumerate; every verdict is
    /// then undecided and the structural fields are empty.
    pub solvable: Option<bool>,
    pub sylows: Vec<SylowInfo>,
    pub report: ClassReport,
    pub quotients: Option<Vec<QuotientFact>>,
}

impl GroupAnalysis {
    pub fn analyze(id: &str, group: Group, caps: Caps) -> GroupAnalysis {
        let report = hierarchy_report_with(&group, id, &caps);
        let en = match group.enumeration() {
            Ok(en) if group.order() <= caps.enumeration => en,
            _ => {
                return GroupAnalysis {
                    id: id.to_string(),
                    group,
                    caps,
                    solvable: None,
                    sylows: Vec::new(),
                    report,
                    quotients: None,
                }
            }
        };
        let solvable = is_solvable_in(&en);
        let sylows = factorize(group.order())
            .into_iter()
            .map(|(p, _)| {
                let s = sylow_subgroup_in(&en, p);
                SylowInfo {
                    shape: sylow_shape_in(&en, &s).expect("Sylow subgroups have prime power order"),
                    normal: en.is_normal(&s),
                    subgroup: s,
                }
            })
            .collect();
        let quotients = quotient_facts(&group, &en, &caps);
        GroupAnalysis {
            id: id.to_string(),
            group,
            caps,
            solvable: Some(solvable),
            sylows,
            report,
            quotients,
        }
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Present whenever `solvable` is.
    pub fn enumeration(&self) -> Option<Arc<Enumeration>> {
        self.solvable.and_then(|_| self.group.enumeration().ok())
    }

    pub fn verdict(&self, c: ClassId) -> &Verdict {
        self.report.verdict(c)
    }

    pub fn is_member(&self, c: ClassId) -> bool {
        self.report.is_member(c)
    }

    pub fn sylow(&self, p: u64) -> Option<&SylowInfo> {
        self.sylows.iter().find(|s| s.shape.p == p)
    }
}

fn quotient_facts(g: &Group, en: &Enumeration, caps: &Caps) -> Option<Vec<QuotientFact>> {
    let mut out = Vec::new();
    for n in normal_subgroups_in(en) {
        if n.is_trivial() || n.order() == g.order() {
            continue;
        }
        let quotient = g.quotient(&n).ok()?;
        let a_pi = Classifier::new(&quotient, *caps).decide(ClassId::APi);
        out.push(QuotientFact {
            normal: n,
            quotient,
            a_pi,
        });
    }
    Some(out)
}

/// Analysed corpus, in manifest order.
#[derive(Debug, Default)]
pub struct Corpus {
    pub groups: Vec<GroupAnalysis>,
}

impl Corpus {
    /// Builds and analyses every entry, on at most `jobs` threads
    /// (0 means the rayon default).
    pub fn analyze(manifest: &Manifest, jobs: usize) -> Result<Corpus> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Unsupported(e.to_string()))?;
        let groups = pool.install(|| {
            manifest
                .entries
                .par_iter()
                .map(analyze_entry)
                .collect::<Result<Vec<_>>>()
        })?;
        Ok(Corpus { groups })
    }

    pub fn get(&self, id: &str) -> Option<&GroupAnalysis> {
        self.groups.iter().find(|g| g.id == id)
    }
}

fn analyze_entry(entry: &CorpusEntry) -> Result<GroupAnalysis> {
    let g = entry.build()?;
    Ok(GroupAnalysis::analyze(&entry.id, g, entry.caps))
}

/// The smallest corpus group that is a member of `a` but not of `b`; ties
/// go to the earlier entry.
pub fn witness_search(corpus: &Corpus, a: ClassId, b: ClassId) -> Option<&GroupAnalysis> {
    corpus
        .groups
        .iter()
        .filter(|g| g.is_member(a) && g.report.is_non_member(b))
        .min_by_key(|g| g.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus(text: &str) -> Corpus {
        let m = Manifest::parse(text, &Caps::default(), None).unwrap();
        Corpus::analyze(&m, 1).unwrap()
    }

    #[test]
    fn analysis_of_s4() {
        let c = corpus("S4\n");
        let g = &c.groups[0];
        assert_eq!(g.solvable, Some(true));
        assert_eq!(g.sylow(2).unwrap().shape.tag.to_string(), "D8");
        assert!(!g.sylow(3).unwrap().normal);
        // normal subgroups of S4: 1, V4, A4, S4
        let orders: Vec<u64> = g
            .quotients
            .as_ref()
            .unwrap()
            .iter()
            .map(|q| q.quotient.order())
            .collect();
        assert_eq!(orders, [6, 2]);
    }

    #[test]
    fn witness_search_picks_smallest() {
        let c = corpus("PSL(2,7)\nC4\nE4\nS3\n");
        let w = witness_search(&c, ClassId::CPi, ClassId::APi).unwrap();
        assert_eq!(w.id, "PSL(2,7)");
        assert!(witness_search(&c, ClassId::B, ClassId::B).is_none());
    }

    #[test]
    fn over_the_enumeration_cap_everything_is_undecided() {
        let c = corpus("S6 enumeration=100\n");
        let g = &c.groups[0];
        assert_eq!(g.solvable, None);
        assert!(g.report.verdicts.values().all(|v| !v.is_decided()));
        assert!(g.quotients.is_none());
    }
}
