//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output.

mod common;

use std::collections::HashSet;
use std::process::{Command, ExitCode};
use std::sync::OnceLock;
use std::time::Instant;

use common::{conjugates_into, element_order, subgroup_from_text, Images, SmallGroup};
use grpclass::caps::Caps;
use grpclass::classes::{decide_with, verify_witness, ClassId, Witness};
use grpclass::harness::checks::{CheckResult, Outcome, Status};
use grpclass::harness::{run_check, Corpus, Manifest};
use grpclass::structure::{sylow_shape, sylow_subgroup, ShapeTag};
use grpclass::subgroups::all_subgroup_classes;
use grpclass::{zoo, Group};

type CriterionResult = Result<String, String>;
type Criterion = (&'static str, fn() -> CriterionResult);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        Corpus::analyze(&Manifest::default_corpus(&Caps::default()), 0).expect("default corpus builds")
    })
}

fn check(id: &str) -> Result<CheckResult, String> {
    let r = run_check(id, corpus()).ok_or(format!("no check {id}"))?;
    let violated: Vec<String> = r
        .instances
        .iter()
        .filter(|i| i.outcome == Outcome::Violated)
        .map(|i| format!("{}: {}", i.group, i.note))
        .collect();
    ensure(
        violated.is_empty(),
        format!("{id} violated on {}", violated.join("; ")),
    )?;
    ensure(r.status == Status::Pass, format!("{id} is {}", r.status.as_str()))?;
    Ok(r)
}

fn witness(g: &Group, c: ClassId) -> Result<Witness, String> {
    let d = decide_with(g, c, &Caps::default());
    ensure(
        d.verdict.is_non_member(),
        format!("{c} verdict is {}", d.verdict.as_str()),
    )?;
    let w = d.witness.ok_or("non-member without witness")?;
    ensure(
        verify_witness(g, &w).map_err(|e| e.to_string())?,
        "witness fails library re-verification",
    )?;
    Ok(w)
}

/// The two witness subgroups as element sets, checked non-conjugate by
/// trying every group element.
fn witness_sets(g: &Group, w: &Witness) -> Result<(Vec<Images>, Vec<Images>), String> {
    let h = subgroup_from_text(&w.first.generators, g.degree());
    let k = subgroup_from_text(&w.second.generators, g.degree());
    ensure(
        h.len() as u64 == w.order && k.len() as u64 == w.order,
        "witness orders differ",
    )?;
    ensure(!conjugates_into(g, &h, &k), "witness subgroups are conjugate")?;
    Ok((h, k))
}

fn is_cyclic(h: &[Images]) -> bool {
    h.iter().any(|x| element_order(x) == h.len() as u64)
}

fn member(g: &Group, c: ClassId) -> Result<(), String> {
    let v = decide_with(g, c, &Caps::default()).verdict;
    ensure(v.is_member(), format!("{c} verdict is {}", v.as_str()))
}

fn c1() -> CriterionResult {
    let g = zoo::alternating(5).map_err(|e| e.to_string())?;
    let classes = all_subgroup_classes(&g).map_err(|e| e.to_string())?;
    ensure(classes.len() == 9, format!("{} classes", classes.len()))?;
    let orders: HashSet<u64> = classes.iter().map(|c| c.order()).collect();
    ensure(orders.len() == 9, "two classes share an order")?;
    let oracle = SmallGroup::new(&g);
    ensure(oracle.subgroup_classes().len() == 9, "brute force disagrees")?;
    member(&g, ClassId::B)?;
    Ok("9 classes, one per order, brute force agrees".into())
}

fn c2() -> CriterionResult {
    member(&zoo::by_name("SL(2,5)").unwrap(), ClassId::B)?;
    let psl = zoo::by_name("PSL(2,8)").unwrap();
    member(&psl, ClassId::BPi)?;
    let b = decide_with(&psl, ClassId::B, &Caps::default()).verdict;
    ensure(!b.is_non_member(), "PSL(2,8) not in B")?;
    Ok(format!("SL(2,5) in B; PSL(2,8) in B_pi, B: {}", b.as_str()))
}

fn c3() -> CriterionResult {
    let g = zoo::by_name("E25:SL(2,3)").unwrap();
    member(&g, ClassId::B)?;
    let s = sylow_subgroup(&g, 2).map_err(|e| e.to_string())?;
    let shape = sylow_shape(&g, &s).map_err(|e| e.to_string())?;
    ensure(
        shape.tag == ShapeTag::QuaternionQ8,
        format!("Sylow 2 is {}", shape.tag),
    )?;
    ensure(!g.is_normal(&s).unwrap(), "Sylow 2 is normal")?;
    // a generator moves the Sylow subgroup off itself
    let en = g.enumeration().unwrap();
    let set: HashSet<Images> = s.elements().iter().map(|&x| common::images(en.perm(x))).collect();
    let moved = g
        .generators()
        .iter()
        .map(common::images)
        .any(|t| set.iter().any(|x| !set.contains(&common::conj(x, &t))));
    ensure(moved, "no generator moves the Sylow 2-subgroup")?;
    Ok("in B, Sylow 2 is Q8 and not normal".into())
}

fn c4() -> CriterionResult {
    let g = zoo::by_name("SL(2,7)").unwrap();
    member(&g, ClassId::A)?;
    let w = witness(&g, ClassId::BPi)?;
    ensure(w.order == 8, format!("witness order {}", w.order))?;
    let (h, k) = witness_sets(&g, &w)?;
    let quaternion = |s: &[Images]| s.iter().filter(|x| element_order(x) == 2).count() == 1 && !is_cyclic(s);
    let ok = (is_cyclic(&h) && quaternion(&k)) || (is_cyclic(&k) && quaternion(&h));
    ensure(ok, "witness is not a cyclic/quaternion pair")?;
    Ok("in A; not in B_pi, order-8 cyclic vs quaternion witness verified".into())
}

fn c5() -> CriterionResult {
    let g = zoo::by_name("PSL(2,7)").unwrap();
    member(&g, ClassId::CPi)?;
    let w = witness(&g, ClassId::APi)?;
    ensure(w.order == 4, format!("witness order {}", w.order))?;
    let (h, k) = witness_sets(&g, &w)?;
    let e4 = |s: &[Images]| s.iter().all(|x| element_order(x) <= 2);
    ensure(
        (is_cyclic(&h) && e4(&k)) || (is_cyclic(&k) && e4(&h)),
        "not a C4/E4 pair",
    )?;
    Ok("in C_pi; not in A_pi, order-4 C4 vs E4 witness verified".into())
}

fn c6() -> CriterionResult {
    let r = check("solvable-api-in-bpi")?;
    Ok(format!("{} over {} groups", r.details, corpus().groups.len()))
}

fn c7() -> CriterionResult {
    let a = check("odd-normal-quotient")?;
    let b = check("solvable-quotient-closure")?;
    Ok(format!("odd normal: {}; solvable: {}", a.details, b.details))
}

fn c8() -> CriterionResult {
    let mut notes = Vec::new();
    for id in ["nonsolvable-sylow2", "nonsolvable-odd-sylow"] {
        notes.push(format!("{id}: {}", check(id)?.details));
    }
    let top = check("solvable-api-sylow-and-top")?;
    let sl = top
        .instances
        .iter()
        .find(|i| i.group == "SL(2,3)")
        .ok_or("SL(2,3) not checked")?;
    ensure(
        sl.note.contains("isomorphic to Q8:C3"),
        format!("SL(2,3): {}", sl.note),
    )?;
    let exact = top
        .instances
        .iter()
        .filter(|i| i.note.contains(" isomorphic to "))
        .count();
    let by_fp = top
        .instances
        .iter()
        .filter(|i| i.note.contains("by fingerprint"))
        .count();
    notes.push(format!("tops: {exact} exact, {by_fp} by fingerprint"));
    Ok(notes.join("; "))
}

fn c9() -> CriterionResult {
    let mut small = 0;
    for g in &corpus().groups {
        if g.order() <= 48 {
            common::compare_small(&g.id, &g.group, &g.report.verdicts)?;
            small += 1;
        }
    }
    let mut decided = 0;
    for g in &corpus().groups {
        let (b, n) = (g.verdict(ClassId::BPi), g.verdict(ClassId::NPi));
        if b.is_decided() && n.is_decided() {
            ensure(
                b == n,
                format!("{}: B_pi {} vs N_pi {}", g.id, b.as_str(), n.as_str()),
            )?;
            decided += 1;
        }
    }
    Ok(format!(
        "{small} groups match brute force; B_pi = N_pi on {decided} groups"
    ))
}

fn c10() -> CriterionResult {
    let g = corpus().get("M11").ok_or("M11 missing from corpus")?;
    ensure(g.order() == 7920, format!("order {}", g.order()))?;
    ensure(common::elements(&g.group).len() == 7920, "closure size differs")?;
    let w = g.report.witnesses.get(&ClassId::APi).ok_or("no A_pi witness")?;
    ensure(g.report.is_non_member(ClassId::APi), "M11 in A_pi")?;
    ensure(w.order == 4, format!("witness order {}", w.order))?;
    let (h, k) = witness_sets(&g.group, w)?;
    ensure(is_cyclic(&h) != is_cyclic(&k), "witness kinds agree")?;
    let s = g.sylow(2).ok_or("no Sylow 2")?;
    ensure(
        !matches!(
            s.shape.tag,
            ShapeTag::Cyclic(_) | ShapeTag::ElementaryAbelian { .. }
        ),
        format!("Sylow 2 is {}", s.shape.tag),
    )?;
    let en = g.enumeration().unwrap();
    let sylow: Vec<Images> = s
        .subgroup
        .elements()
        .iter()
        .map(|&x| common::images(en.perm(x)))
        .collect();
    ensure(
        conjugates_into(&g.group, &h, &sylow),
        "first subgroup not inside a Sylow 2",
    )?;
    ensure(
        conjugates_into(&g.group, &k, &sylow),
        "second subgroup not inside a Sylow 2",
    )?;
    Ok(format!(
        "order 7920, Sylow 2 {}, C4 and E4 inside it, non-conjugate",
        s.shape.tag
    ))
}

fn c11() -> CriterionResult {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_grpclass"))
            .args(["corpus", "run", "--json"])
            .env_remove("GRPCLASS_ENUMERATION")
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(
        a.status.success() && b.status.success(),
        "corpus run exited nonzero",
    )?;
    ensure(a.stdout == b.stdout, "reports differ")?;
    Ok(format!("two runs, {} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("A5 in B with 9 subgroup classes", c1),
        ("SL(2,5) in B, PSL(2,8) in B_pi", c2),
        ("E25:SL(2,3) in B with non-normal Q8 Sylow", c3),
        ("SL(2,7) in A, not in B_pi", c4),
        ("PSL(2,7) in C_pi, not in A_pi", c5),
        ("solvable A_pi groups are in B_pi", c6),
        ("quotient closure", c7),
        ("Sylow shapes and top quotients", c8),
        ("oracle equivalence", c9),
        ("M11 not in A_pi", c10),
        ("deterministic reports", c11),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = f();
        match result {
            Ok(detail) => println!(
                "criterion {:2} PASS  {title}: {detail} [{:.1?}]",
                i + 1,
                t.elapsed()
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL  {title}: {why} [{:.1?}]", i + 1, t.elapsed());
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
