use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupcore::{generate_group, GroupTable, Permutation};

/// A named permutation group given by generators in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDefinition {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
}

impl GroupDefinition {
    pub fn new(name: &str, degree: usize, generators: &[&str], tags: &[&str]) -> Self {
        Self {
            name: name.to_string(),
            degree,
            generators: generators.iter().map(|g| g.to_string()).collect(),
            tags: tags.iter().map(|t| t.to_string()).collect(),
        }
    }

    pub fn permutations(&self) -> Result<Vec<Permutation>> {
        self.generators.iter().map(|g| Permutation::parse(g, self.degree)).collect()
    }

    pub fn build(&self, order_cap: usize) -> Result<GroupTable> {
        Ok(generate_group(&self.permutations()?, order_cap)?.named(&self.name))
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    /// Value of a `key=value` tag.
    pub fn tag_value(&self, key: &str) -> Option<&str> {
        self.tags.iter().find_map(|t| t.strip_prefix(key)?.strip_prefix('='))
    }

    /// The definition in the group file format.
    pub fn to_file_text(&self) -> String {
        let mut out = format!("group {}\ndegree {}\n", self.name, self.degree);
        for g in &self.generators {
            out.push_str(&format!("gen {g}\n"));
        }
        for t in &self.tags {
            out.push_str(&format!("tag {t}\n"));
        }
        out
    }
}

/// Parses the line-oriented group file format.
///
/// ```text
/// # comment
/// group Sym3
/// degree 3
/// gen (1,2,3)
/// gen (1,2)
/// tag soluble
/// ```
pub fn parse_group_file(text: &str) -> Result<Vec<GroupDefinition>> {
    let err = |line: usize, message: String| Error::GroupFile { line, message };
    let mut defs: Vec<(usize, GroupDefinition)> = Vec::new();
    let mut names = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, arg) = line.split_once(char::is_whitespace).map_or((line, ""), |(k, a)| (k, a.trim()));
        if keyword == "group" {
            if arg.is_empty() || arg.contains(char::is_whitespace) {
                return Err(err(line_no, "expected `group <name>` with a single-word name".into()));
            }
            if !names.insert(arg.to_string()) {
                return Err(Error::DuplicateName(arg.to_string()));
            }
            defs.push((
                line_no,
                GroupDefinition { name: arg.to_string(), degree: 0, generators: Vec::new(), tags: vec![] },
            ));
            continue;
        }
        let Some((_, def)) = defs.last_mut() else {
            return Err(err(line_no, format!("`{keyword}` before any `group` line")));
        };
        match keyword {
            "degree" => {
                if def.degree != 0 {
                    return Err(err(line_no, "degree given twice".into()));
                }
                def.degree = arg.parse().map_err(|_| err(line_no, format!("invalid degree `{arg}`")))?;
                if def.degree == 0 {
                    return Err(err(line_no, "degree must be positive".into()));
                }
            }
            "gen" => {
                if def.degree == 0 {
                    return Err(err(line_no, "`gen` before `degree`".into()));
                }
                Permutation::parse(arg, def.degree).map_err(|e| err(line_no, e.to_string()))?;
                def.generators.push(arg.to_string());
            }
            "tag" if !arg.is_empty() => def.tags.push(arg.to_string()),
            _ => return Err(err(line_no, format!("unrecognised line `{line}`"))),
        }
    }
    defs.into_iter()
        .map(|(line, def)| {
            if def.generators.is_empty() {
                Err(err(line, format!("group `{}` has no generators", def.name)))
            } else {
                Ok(def)
            }
        })
        .collect()
}

pub fn load_group_file(path: &Path) -> Result<Vec<GroupDefinition>> {
    parse_group_file(&std::fs::read_to_string(path)?)
}
