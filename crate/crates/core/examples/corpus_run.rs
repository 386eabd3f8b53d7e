//! Analyse a small manifest and print the JSON report.

use grpclass::caps::Caps;
use grpclass::harness::{report, run_checks, Corpus, Manifest};

const MANIFEST: &str = "\
# small solvable and simple groups
S4
SL(2,3)
A4xC5
A5
PSL(2,7) subgroup_cap=500
";

fn main() -> grpclass::Result<()> {
    let manifest = Manifest::parse(MANIFEST, &Caps::default(), None)?;
    let corpus = Corpus::analyze(&manifest, 0)?;
    let checks = run_checks(&corpus, None).expect("registered ids");
    print!("{}", report::to_markdown(&corpus, &checks));
    let json = report::to_json(&corpus, &checks);
    println!("\nJSON report: {} bytes", json.len());
    Ok(())
}
