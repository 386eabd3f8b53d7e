use std::fs;
use std::path::{Path, PathBuf};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::zoo::{self, NamedGroupId};

/// Where a corpus entry's generators come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Named(NamedGroupId),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub source: Source,
    pub caps: Caps,
}

impl CorpusEntry {
    pub fn named(id: NamedGroupId, caps: Caps) -> Self {
        CorpusEntry {
            id: id.to_string(),
            source: Source::Named(id),
            caps,
        }
    }

    pub fn build(&self) -> Result<Group> {
        let g = match &self.source {
            Source::Named(id) => zoo::construct(id)?,
            Source::File(path) => zoo::ingest(path)?,
        };
        Ok(g.with_enumeration_cap(self.caps.enumeration))
    }
}

/// An ordered list of groups to analyse.
///
/// Text form: one entry per line, a group name (or `file:<path>`) followed
/// by optional `key=value` cap overrides. `#` starts a comment.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Manifest {
    pub entries: Vec<CorpusEntry>,
}

/// Groups whose full subgroup enumeration is affordable despite an order
/// above the default cap.
const RAISED_SUBGROUP_CAP: [(&str, u64); 3] =
    [("SL(2,13)", 2200), ("E32:(C31:C5)", 5000), ("PSL(2,8)xC5", 2600)];

impl Manifest {
    /// The built-in corpus, with per-entry caps on top of `base`.
    pub fn default_corpus(base: &Caps) -> Manifest {
        let entries = zoo::default_corpus()
            .into_iter()
            .map(|id| {
                let mut caps = *base;
                let name = id.to_string();
                if let Some(&(_, cap)) = RAISED_SUBGROUP_CAP.iter().find(|(n, _)| *n == name) {
                    caps.full_subgroups = caps.full_subgroups.max(cap);
                }
                CorpusEntry::named(id, caps)
            })
            .collect();
        Manifest { entries }
    }

    /// Parses manifest text. Relative `file:` paths resolve against `dir`.
    pub fn parse(text: &str, base: &Caps, dir: Option<&Path>) -> Result<Manifest> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: i + 1, message };
            let mut words = line.split_whitespace();
            let head = words.next().expect("line is nonempty");
            let mut caps = *base;
            for w in words {
                let (k, v) = w
                    .split_once('=')
                    .ok_or_else(|| err(format!("expected key=value, found {w:?}")))?;
                let v: u64 = v.parse().map_err(|_| err(format!("bad cap value {v:?}")))?;
                if !caps.set(k, v) {
                    return Err(err(format!("unknown cap {k:?}")));
                }
            }
            let entry = if let Some(path) = head.strip_prefix("file:") {
                let path = match dir {
                    Some(d) if Path::new(path).is_relative() => d.join(path),
                    _ => PathBuf::from(path),
                };
                let id = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| head.to_string());
                CorpusEntry {
                    id,
                    source: Source::File(path),
                    caps,
                }
            } else {
                let id: NamedGroupId = head.parse().map_err(|e: Error| err(e.to_string()))?;
                CorpusEntry::named(id, caps)
            };
            entries.push(entry);
        }
        Ok(Manifest { entries })
    }

    pub fn load(path: impl AsRef<Path>, base: &Caps) -> Result<Manifest> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)?;
        Manifest::parse(&text, base, path.parent())
    }

    /// Entries in manifest text form.
    pub fn to_text(&self) -> String {
        let defaults = Caps::default();
        let mut out = String::new();
        for e in &self.entries {
            match &e.source {
                Source::Named(id) => out.push_str(&id.to_string()),
                Source::File(p) => {
                    out.push_str("file:");
                    out.push_str(&p.display().to_string());
                }
            }
            for (name, value, default) in [
                ("enumeration", e.caps.enumeration, defaults.enumeration),
                ("subgroup_cap", e.caps.full_subgroups, defaults.full_subgroups),
                ("sylow_cap", e.caps.sylow_order, defaults.sylow_order),
                ("orbit_keys", e.caps.orbit_keys, defaults.orbit_keys),
                ("isomorphism_cap", e.caps.isomorphism, defaults.isomorphism),
            ] {
                if value != default {
                    out.push_str(&format!(" {name}={value}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_names_caps_and_comments() {
        let text = "# small\nC4\nA5 subgroup_cap=10   # trailing\n\nQ8xC7\n";
        let m = Manifest::parse(text, &Caps::default(), None).unwrap();
        let ids: Vec<&str> = m.entries.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(ids, ["C4", "A5", "Q8xC7"]);
        assert_eq!(m.entries[1].caps.full_subgroups, 10);
        assert_eq!(m.entries[0].caps, Caps::default());
    }

    #[test]
    fn reports_line_numbers() {
        let bad = Manifest::parse("C4\nZ9\n", &Caps::default(), None).unwrap_err();
        assert!(matches!(bad, Error::Parse { line: 2, .. }));
        let bad = Manifest::parse("C4 widths=3\n", &Caps::default(), None).unwrap_err();
        assert!(matches!(bad, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn default_corpus_round_trips_through_text() {
        let m = Manifest::default_corpus(&Caps::default());
        let again = Manifest::parse(&m.to_text(), &Caps::default(), None).unwrap();
        assert_eq!(m, again);
        let sl = m.entries.iter().find(|e| e.id == "SL(2,13)").unwrap();
        assert_eq!(sl.caps.full_subgroups, 2200);
    }
}
