//! Membership in the classes of groups where equal-order subgroups of a
//! given kind are conjugate.
//!
//! Plain classes quantify over all subgroups of the kind, π-classes over
//! those of prime power order. A group is a member when, for every order,
//! the subgroups of the kind with that order form a single conjugacy class.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::factorize;
use crate::group::{Enumeration, Group, Subgroup, SubgroupFingerprint};
use crate::structure::{p_part, subgroup_is_supersolvable};
use crate::subgroups::{all_subgroup_classes_in, p_subgroup_classes_in, SubgroupClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    B,
    H,
    N,
    A,
    C,
    BPi,
    HPi,
    NPi,
    APi,
    CPi,
}

/// Which subgroups a class quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    All,
    Supersolvable,
    Nilpotent,
    Abelian,
    Cyclic,
}

impl ClassId {
    pub const ALL: [ClassId; 10] = [
        ClassId::B,
        ClassId::H,
        ClassId::N,
        ClassId::A,
        ClassId::C,
        ClassId::BPi,
        ClassId::HPi,
        ClassId::NPi,
        ClassId::APi,
        ClassId::CPi,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClassId::B => "B",
            ClassId::H => "H",
            ClassId::N => "N",
            ClassId::A => "A",
            ClassId::C => "C",
            ClassId::BPi => "B_pi",
            ClassId::HPi => "H_pi",
            ClassId::NPi => "N_pi",
            ClassId::APi => "A_pi",
            ClassId::CPi => "C_pi",
        }
    }

    pub fn is_pi(&self) -> bool {
        matches!(
            self,
            ClassId::BPi | ClassId::HPi | ClassId::NPi | ClassId::APi | ClassId::CPi
        )
    }

    pub fn kind(&self) -> Kind {
        match self {
            ClassId::B | ClassId::BPi => Kind::All,
            ClassId::H | ClassId::HPi => Kind::Supersolvable,
            ClassId::N | ClassId::NPi => Kind::Nilpotent,
            ClassId::A | ClassId::APi => Kind::Abelian,
            ClassId::C | ClassId::CPi => Kind::Cyclic,
        }
    }

    /// Position in its chain, smallest class first.
    fn rank(&self) -> usize {
        match self.kind() {
            Kind::All => 0,
            Kind::Supersolvable => 1,
            Kind::Nilpotent => 2,
            Kind::Abelian => 3,
            Kind::Cyclic => 4,
        }
    }

    /// Whether membership in `self` implies membership in `other` for every
    /// group: `other` quantifies over a subset of the subgroups `self` does.
    pub fn contained_in(&self, other: ClassId) -> bool {
        (other.is_pi() || !self.is_pi()) && self.rank() <= other.rank()
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassId::ALL
            .into_iter()
            .find(|c| {
                c.as_str().eq_ignore_ascii_case(s) || c.as_str().replace('_', "").eq_ignore_ascii_case(s)
            })
            .ok_or_else(|| Error::UnknownName(format!("class {s}")))
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Member,
    NonMember,
    Undecided(String),
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Member => "member",
            Verdict::NonMember => "non-member",
            Verdict::Undecided(_) => "undecided",
        }
    }

    pub fn is_member(&self) -> bool {
        *self == Verdict::Member
    }

    pub fn is_non_member(&self) -> bool {
        *self == Verdict::NonMember
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, Verdict::Undecided(_))
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A subgroup as it appears in reports.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupSummary {
    pub order: u64,
    pub generators: Vec<String>,
    /// Listed for subgroups of order at most 64.
    pub elements: Vec<String>,
    pub fingerprint: SubgroupFingerprint,
}

impl SubgroupSummary {
    fn new(en: &Enumeration, h: &Subgroup) -> Self {
        SubgroupSummary {
            order: h.order(),
            generators: h
                .generator_permutations(en)
                .iter()
                .map(|p| p.to_string())
                .collect(),
            elements: if h.order() <= 64 {
                h.permutations(en).map(|p| p.to_string()).collect()
            } else {
                Vec::new()
            },
            fingerprint: h.fingerprint(en),
        }
    }
}

/// Two non-conjugate subgroups of equal order and of the class's kind.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub class: ClassId,
    pub order: u64,
    pub first: SubgroupSummary,
    pub second: SubgroupSummary,
    /// Class whose search produced the pair, when inferred for another.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inferred_from: Option<ClassId>,
    #[serde(skip)]
    pub subgroups: (Subgroup, Subgroup),
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub group: String,
    pub order: u64,
    pub verdicts: BTreeMap<ClassId, Verdict>,
    pub witnesses: BTreeMap<ClassId, Witness>,
    /// Chain-consistency problems; always empty for a correct implementation.
    pub violations: Vec<String>,
}

impl ClassReport {
    pub fn verdict(&self, c: ClassId) -> &Verdict {
        &self.verdicts[&c]
    }

    pub fn is_member(&self, c: ClassId) -> bool {
        self.verdicts[&c].is_member()
    }

    pub fn is_non_member(&self, c: ClassId) -> bool {
        self.verdicts[&c].is_non_member()
    }
}

/// Subgroup-class data for one group, computed on demand.
pub struct Classifier<'a> {
    group: &'a Group,
    caps: Caps,
    pi: Option<std::result::Result<Vec<SubgroupClass>, String>>,
    all: Option<std::result::Result<Vec<SubgroupClass>, String>>,
}

impl<'a> Classifier<'a> {
    pub fn new(group: &'a Group, caps: Caps) -> Self {
        Classifier {
            group,
            caps,
            pi: None,
            all: None,
        }
    }

    fn enumeration(&self) -> std::result::Result<std::sync::Arc<Enumeration>, String> {
        if self.group.order() > self.caps.enumeration {
            return Err(format!(
                "group order {} exceeds the enumeration cap {}",
                self.group.order(),
                self.caps.enumeration
            ));
        }
        self.group.enumeration().map_err(|e| e.to_string())
    }

    /// Classes of nontrivial subgroups of prime power order, sorted by order.
    pub fn pi_classes(&mut self) -> std::result::Result<&[SubgroupClass], String> {
        if self.pi.is_none() {
            self.pi = Some(self.compute_pi());
        }
        self.pi.as_ref().unwrap().as_deref().map_err(Clone::clone)
    }

    fn compute_pi(&self) -> std::result::Result<Vec<SubgroupClass>, String> {
        let order = self.group.order();
        for (p, _) in factorize(order) {
            let s = p_part(order, p);
            if s > self.caps.sylow_order {
                return Err(format!(
                    "Sylow {p}-subgroup of order {s} exceeds the cap {}",
                    self.caps.sylow_order
                ));
            }
        }
        let en = self.enumeration()?;
        let mut out = Vec::new();
        for (p, _) in factorize(order) {
            out.extend(p_subgroup_classes_in(&en, p, self.caps.orbit_keys).map_err(|e| e.to_string())?);
        }
        out.sort_by(|a, b| {
            (a.order(), a.representative.elements()).cmp(&(b.order(), b.representative.elements()))
        });
        Ok(out)
    }

    /// Every subgroup class, sorted by order.
    pub fn all_classes(&mut self) -> std::result::Result<&[SubgroupClass], String> {
        if self.all.is_none() {
            self.all = Some(self.compute_all());
        }
        self.all.as_ref().unwrap().as_deref().map_err(Clone::clone)
    }

    fn compute_all(&self) -> std::result::Result<Vec<SubgroupClass>, String> {
        let order = self.group.order();
        if order > self.caps.full_subgroups {
            return Err(format!(
                "group order {order} exceeds the subgroup enumeration cap {}",
                self.caps.full_subgroups
            ));
        }
        let en = self.enumeration()?;
        all_subgroup_classes_in(&en, self.caps.orbit_keys).map_err(|e| e.to_string())
    }

    /// Decides `c` from the subgroup classes alone, without inference.
    pub fn decide(&mut self, c: ClassId) -> Decision {
        let group = self.group;
        let classes = if c.is_pi() {
            self.pi_classes()
        } else {
            self.all_classes()
        };
        let classes = match classes {
            Ok(cl) => cl.to_vec(),
            Err(reason) => {
                return Decision {
                    verdict: Verdict::Undecided(reason),
                    witness: None,
                }
            }
        };
        let en = group.enumeration().expect("classes were enumerated");
        let kept: Vec<&SubgroupClass> = classes
            .iter()
            .filter(|cl| has_kind(group, &en, &cl.representative, c.kind()))
            .collect();
        let mut i = 0;
        while i < kept.len() {
            let mut j = i;
            while j < kept.len() && kept[j].order() == kept[i].order() {
                j += 1;
            }
            if j - i >= 2 {
                let bucket = &kept[i..j];
                // prefer a pair that differs structurally
                let pair = (0..bucket.len())
                    .flat_map(|a| (a + 1..bucket.len()).map(move |b| (a, b)))
                    .find(|&(a, b)| bucket[a].fingerprint != bucket[b].fingerprint)
                    .unwrap_or((0, 1));
                let (x, y) = (&bucket[pair.0].representative, &bucket[pair.1].representative);
                return Decision {
                    verdict: Verdict::NonMember,
                    witness: Some(Witness {
                        class: c,
                        order: x.order(),
                        first: SubgroupSummary::new(&en, x),
                        second: SubgroupSummary::new(&en, y),
                        inferred_from: None,
                        subgroups: (x.clone(), y.clone()),
                    }),
                };
            }
            i = j;
        }
        Decision {
            verdict: Verdict::Member,
            witness: None,
        }
    }
}

fn has_kind(parent: &Group, en: &Enumeration, h: &Subgroup, kind: Kind) -> bool {
    match kind {
        Kind::All => true,
        Kind::Cyclic => h.is_cyclic(en),
        Kind::Abelian => h.is_abelian(en),
        Kind::Nilpotent => subgroup_is_nilpotent(en, h),
        Kind::Supersolvable => subgroup_is_nilpotent(en, h) || subgroup_is_supersolvable(parent, h),
    }
}

/// A finite group is nilpotent iff, for each prime, its elements of that
/// prime power order number exactly the p-part of the order.
pub(crate) fn subgroup_is_nilpotent(en: &Enumeration, h: &Subgroup) -> bool {
    factorize(h.order()).into_iter().all(|(p, _)| {
        let count = h
            .elements()
            .iter()
            .filter(|&&x| {
                let mut o = en.element_order(x) as u64;
                while o.is_multiple_of(p) {
                    o /= p;
                }
                o == 1
            })
            .count() as u64;
        count == p_part(h.order(), p)
    })
}

/// Decides a single class, with chain inference when the direct search is
/// over a cap.
pub fn decide(g: &Group, c: ClassId) -> Decision {
    decide_with(g, c, &Caps::default())
}

pub fn decide_with(g: &Group, c: ClassId, caps: &Caps) -> Decision {
    let mut classifier = Classifier::new(g, *caps);
    let d = classifier.decide(c);
    if d.verdict.is_decided() {
        return d;
    }
    let report = report_from(&mut classifier, "", &ClassId::ALL);
    Decision {
        verdict: report.verdicts[&c].clone(),
        witness: report.witnesses.get(&c).cloned(),
    }
}

/// All ten verdicts, with undecided ones filled in by chain inference.
pub fn hierarchy_report(g: &Group, name: &str) -> ClassReport {
    hierarchy_report_with(g, name, &Caps::default())
}

pub fn hierarchy_report_with(g: &Group, name: &str, caps: &Caps) -> ClassReport {
    let mut classifier = Classifier::new(g, *caps);
    report_from(&mut classifier, name, &ClassId::ALL)
}

/// π-class verdicts only (plain classes are still inferred where possible).
pub fn pi_report_with(g: &Group, name: &str, caps: &Caps) -> ClassReport {
    let mut classifier = Classifier::new(g, *caps);
    let direct: Vec<ClassId> = ClassId::ALL.into_iter().filter(|c| c.is_pi()).collect();
    report_from(&mut classifier, name, &direct)
}

fn report_from(classifier: &mut Classifier<'_>, name: &str, direct: &[ClassId]) -> ClassReport {
    let group = classifier.group;
    let mut verdicts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for c in ClassId::ALL {
        let d = if direct.contains(&c) {
            classifier.decide(c)
        } else {
            Decision {
                verdict: Verdict::Undecided("not requested".into()),
                witness: None,
            }
        };
        verdicts.insert(c, d.verdict);
        if let Some(w) = d.witness {
            witnesses.insert(c, w);
        }
    }
    infer(&mut verdicts, &mut witnesses);
    let violations = consistency_violations(&verdicts);
    ClassReport {
        group: name.to_string(),
        order: group.order(),
        verdicts,
        witnesses,
        violations,
    }
}

/// Member of a class ⇒ member of every larger one; non-member ⇒ non-member
/// of every smaller one, reusing the witness.
fn infer(verdicts: &mut BTreeMap<ClassId, Verdict>, witnesses: &mut BTreeMap<ClassId, Witness>) {
    let decided: Vec<(ClassId, Verdict)> = verdicts
        .iter()
        .filter(|(_, v)| v.is_decided())
        .map(|(c, v)| (*c, v.clone()))
        .collect();
    for c in ClassId::ALL {
        if verdicts[&c].is_decided() {
            continue;
        }
        if decided.iter().any(|(d, v)| v.is_member() && d.contained_in(c)) {
            verdicts.insert(c, Verdict::Member);
            continue;
        }
        // smallest-kind source, so the witness stays as specific as possible
        if let Some((d, _)) = decided
            .iter()
            .filter(|(d, v)| v.is_non_member() && c.contained_in(*d))
            .max_by_key(|(d, _)| (d.rank(), !d.is_pi()))
        {
            verdicts.insert(c, Verdict::NonMember);
            if let Some(w) = witnesses.get(d).cloned() {
                let source = w.inferred_from.unwrap_or(*d);
                witnesses.insert(
                    c,
                    Witness {
                        class: c,
                        inferred_from: Some(source),
                        ..w
                    },
                );
            }
        }
    }
}

fn consistency_violations(verdicts: &BTreeMap<ClassId, Verdict>) -> Vec<String> {
    let mut out = Vec::new();
    for a in ClassId::ALL {
        for b in ClassId::ALL {
            if a != b && a.contained_in(b) && verdicts[&a].is_member() && verdicts[&b].is_non_member() {
                out.push(format!("{a} member but {b} non-member"));
            }
        }
    }
    let trio = [ClassId::BPi, ClassId::HPi, ClassId::NPi].map(|c| &verdicts[&c]);
    if trio.iter().all(|v| v.is_decided()) && (trio[0] != trio[1] || trio[1] != trio[2]) {
        out.push("B_pi, H_pi and N_pi verdicts differ".into());
    }
    out
}

/// Re-checks a witness from scratch: equal orders, the class's property, and
/// no conjugating element in an exhaustive scan of `G`.
pub fn verify_witness(g: &Group, w: &Witness) -> Result<bool> {
    let en = g.enumeration()?;
    let (x, y) = &w.subgroups;
    if x.order() != y.order() || x.order() != w.order {
        return Ok(false);
    }
    let kind = w.class.kind();
    if !has_kind(g, &en, x, kind) || !has_kind(g, &en, y, kind) {
        return Ok(false);
    }
    if w.class.is_pi() && factorize(x.order()).len() != 1 {
        return Ok(false);
    }
    Ok(en.all().all(|t| en.conjugate_subgroup(x, t) != *y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::by_name;

    fn report(name: &str) -> ClassReport {
        let g = by_name(name).unwrap();
        let r = hierarchy_report(&g, name);
        assert!(r.violations.is_empty(), "{name}: {:?}", r.violations);
        r
    }

    #[test]
    fn cyclic_groups_are_in_every_class() {
        let r = report("C12");
        assert!(ClassId::ALL.iter().all(|&c| r.is_member(c)));
    }

    #[test]
    fn e4_is_not_in_c_pi() {
        let g = by_name("E4").unwrap();
        let d = decide(&g, ClassId::CPi);
        assert!(d.verdict.is_non_member());
        let w = d.witness.unwrap();
        assert_eq!(w.order, 2);
        assert!(verify_witness(&g, &w).unwrap());
    }

    #[test]
    fn q8_is_not_in_a_pi() {
        let g = by_name("Q8").unwrap();
        let d = decide(&g, ClassId::APi);
        assert!(d.verdict.is_non_member());
        let w = d.witness.unwrap();
        assert_eq!(w.order, 4);
        assert_eq!(w.first.elements.len(), 4);
        assert!(verify_witness(&g, &w).unwrap());
        let r = report("Q8");
        assert!(ClassId::ALL.iter().all(|&c| r.is_non_member(c)));
    }

    #[test]
    fn sl23_is_in_b() {
        let r = report("SL(2,3)");
        assert!(r.is_member(ClassId::B));
    }

    #[test]
    fn a5_is_in_every_class() {
        let r = report("A5");
        assert!(ClassId::ALL.iter().all(|&c| r.is_member(c)));
    }

    #[test]
    fn s4_fails_c_pi_with_transposition_pair() {
        let g = by_name("S4").unwrap();
        let d = decide(&g, ClassId::CPi);
        let w = d.witness.unwrap();
        assert_eq!(w.order, 2);
        assert!(verify_witness(&g, &w).unwrap());
    }

    #[test]
    fn containment() {
        assert!(ClassId::B.contained_in(ClassId::C));
        assert!(ClassId::A.contained_in(ClassId::APi));
        assert!(!ClassId::APi.contained_in(ClassId::A));
        assert!(!ClassId::C.contained_in(ClassId::A));
        assert_eq!("A_pi".parse::<ClassId>().unwrap(), ClassId::APi);
        assert_eq!("bpi".parse::<ClassId>().unwrap(), ClassId::BPi);
    }

    #[test]
    fn inference_fills_capped_classes() {
        let g = by_name("Q16").unwrap();
        let caps = Caps {
            full_subgroups: 8,
            ..Caps::default()
        };
        let r = hierarchy_report_with(&g, "Q16", &caps);
        // plain classes inherit the π witnesses
        assert!(r.is_non_member(ClassId::A));
        let w = &r.witnesses[&ClassId::A];
        assert!(w.inferred_from.unwrap().is_pi());
        assert!(verify_witness(&g, w).unwrap());
        assert!(r.violations.is_empty());
    }

    #[test]
    fn nilpotency_by_element_counts() {
        for (name, expected) in [
            ("S3", false),
            ("Q8xC7", true),
            ("D8", true),
            ("A4", false),
            ("C6", true),
        ] {
            let g = by_name(name).unwrap();
            let en = g.enumeration().unwrap();
            assert_eq!(subgroup_is_nilpotent(&en, &en.whole()), expected, "{name}");
        }
    }
}
