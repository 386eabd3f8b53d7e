//! Run the consequence checks over the default corpus, or over the groups
//! named on the command line.

use grpclass::caps::Caps;
use grpclass::harness::checks::Outcome;
use grpclass::harness::{run_checks, Corpus, Manifest};

fn main() -> grpclass::Result<()> {
    let caps = Caps::from_env();
    let names: Vec<String> = std::env::args().skip(1).collect();
    let manifest = if names.is_empty() {
        Manifest::default_corpus(&caps)
    } else {
        Manifest::parse(&names.join("\n"), &caps, None)?
    };
    let corpus = Corpus::analyze(&manifest, 0)?;
    for r in run_checks(&corpus, None).expect("registered ids") {
        println!("{:30} {:8} {}", r.id, r.status.as_str(), r.details);
        for i in r.instances.iter().filter(|i| i.outcome != Outcome::Holds) {
            println!("    {:?} {}: {}", i.outcome, i.group, i.note);
        }
    }
    Ok(())
}
