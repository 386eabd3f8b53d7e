//! The smallest corpus group separating two classes.

use grpclass::caps::Caps;
use grpclass::classes::ClassId;
use grpclass::harness::{witness_search, Corpus, Manifest};

fn main() -> grpclass::Result<()> {
    let text = "C4\nS3\nQ8\nA4\nSL(2,3)\nA5\nSL(2,5)\nPSL(2,7)\nSL(2,7)\n";
    let corpus = Corpus::analyze(&Manifest::parse(text, &Caps::default(), None)?, 0)?;
    for (a, b) in [
        (ClassId::CPi, ClassId::APi),
        (ClassId::APi, ClassId::BPi),
        (ClassId::C, ClassId::A),
        (ClassId::B, ClassId::B),
    ] {
        match witness_search(&corpus, a, b) {
            Some(g) => println!("{a} \\ {b}: {} (order {})", g.id, g.order()),
            None => println!("{a} \\ {b}: none in corpus"),
        }
    }
    Ok(())
}
