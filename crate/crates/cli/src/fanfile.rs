//! Plain-text fan files.
//!
//! ```text
//! # comment
//! id 25
//! name B1
//! dim 4
//! rays 6
//! 0 0 0 1
//! ...
//! cones 8
//! 1 2 3 4
//! ...
//! expect 2688 928
//! ```
//!
//! `id`, `dim`, `rays` and `cones` are required; `name` and `expect` are
//! optional. Cone rows hold 0-based ray indices.

use std::fmt::Write as _;
use std::path::Path;

use toric_cy4::Fan;

use crate::error::HarnessError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanFile {
    pub id: String,
    pub name: Option<String>,
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    /// Expected `(chi(M), tau(M))`.
    pub expected: Option<(i64, i64)>,
}

impl FanFile {
    pub fn to_fan(&self) -> Result<Fan, HarnessError> {
        Fan::new(self.dim, self.rays.clone(), self.max_cones.clone()).map_err(|e| HarnessError::Validation {
            origin: self.id.clone(),
            source: e,
        })
    }

    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or(&self.id)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "id {}", self.id).unwrap();
        if let Some(name) = &self.name {
            writeln!(s, "name {name}").unwrap();
        }
        writeln!(s, "dim {}", self.dim).unwrap();
        writeln!(s, "rays {}", self.rays.len()).unwrap();
        for r in &self.rays {
            writeln!(s, "{}", join(r)).unwrap();
        }
        writeln!(s, "cones {}", self.max_cones.len()).unwrap();
        for c in &self.max_cones {
            writeln!(s, "{}", join(c)).unwrap();
        }
        if let Some((chi, tau)) = self.expected {
            writeln!(s, "expect {chi} {tau}").unwrap();
        }
        s
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn parse_fan_file(path: &Path) -> Result<FanFile, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let file = parse_fan_str(&text, &path.display().to_string())?;
    // structural validation against the ray count happens here, geometry later
    file.to_fan().map_err(|e| match e {
        HarnessError::Validation { source, .. } => HarnessError::Validation {
            origin: path.display().to_string(),
            source,
        },
        other => other,
    })?;
    Ok(file)
}

/// Parses fan-file text. `origin` names the source in diagnostics.
pub fn parse_fan_str(text: &str, origin: &str) -> Result<FanFile, HarnessError> {
    let err = |line: usize, message: String| HarnessError::Parse {
        origin: origin.to_string(),
        line,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut id = None;
    let mut name = None;
    let mut dim = None;
    let mut rays: Option<Vec<Vec<i64>>> = None;
    let mut cones: Option<Vec<Vec<usize>>> = None;
    let mut expected = None;
    let mut last_line = 0;

    while let Some((ln, line)) = lines.next() {
        last_line = ln;
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let count = |what: &str| -> Result<usize, HarnessError> {
            rest.parse()
                .map_err(|_| err(ln, format!("`{what}` expects a count, got `{rest}`")))
        };
        match key {
            "id" | "name" if rest.is_empty() => {
                return Err(err(ln, format!("`{key}` needs a value")));
            }
            "id" => set_once(&mut id, rest.to_string(), || err(ln, "duplicate `id`".into()))?,
            "name" => set_once(&mut name, rest.to_string(), || err(ln, "duplicate `name`".into()))?,
            "dim" => {
                let d = count("dim")?;
                if d == 0 {
                    return Err(err(ln, "`dim` must be positive".into()));
                }
                set_once(&mut dim, d, || err(ln, "duplicate `dim`".into()))?;
            }
            "rays" => {
                let Some(d) = dim else {
                    return Err(err(ln, "`dim` must come before `rays`".into()));
                };
                let k = count("rays")?;
                let mut rows = Vec::with_capacity(k);
                for i in 0..k {
                    let (rl, row) = lines
                        .next()
                        .ok_or_else(|| err(ln, format!("expected {k} ray rows, found {i}")))?;
                    last_line = rl;
                    let v: Vec<i64> = parse_row(row).map_err(|m| err(rl, m))?;
                    if v.len() != d {
                        return Err(err(rl, format!("ray has {} coordinates, expected {d}", v.len())));
                    }
                    rows.push(v);
                }
                set_once(&mut rays, rows, || err(ln, "duplicate `rays` block".into()))?;
            }
            "cones" => {
                let Some(r) = rays.as_ref().map(Vec::len) else {
                    return Err(err(ln, "`rays` must come before `cones`".into()));
                };
                let m = count("cones")?;
                let mut rows = Vec::with_capacity(m);
                for i in 0..m {
                    let (cl, row) = lines
                        .next()
                        .ok_or_else(|| err(ln, format!("expected {m} cone rows, found {i}")))?;
                    last_line = cl;
                    let v: Vec<usize> = parse_row(row).map_err(|msg| err(cl, msg))?;
                    if let Some(bad) = v.iter().find(|&&x| x >= r) {
                        return Err(HarnessError::Validation {
                            origin: format!("{origin}:{cl}"),
                            source: toric_cy4::Error::MalformedInput(format!(
                                "cone index {bad} out of range (rays 0..{r})"
                            )),
                        });
                    }
                    rows.push(v);
                }
                set_once(&mut cones, rows, || err(ln, "duplicate `cones` block".into()))?;
            }
            "expect" => {
                let v: Vec<i64> = parse_row(rest).map_err(|m| err(ln, m))?;
                let [chi, tau] = v[..] else {
                    return Err(err(ln, "`expect` takes two integers: chi tau".into()));
                };
                set_once(&mut expected, (chi, tau), || err(ln, "duplicate `expect`".into()))?;
            }
            other => return Err(err(ln, format!("unknown keyword `{other}`"))),
        }
    }
    let missing = |what: &str| err(last_line, format!("missing `{what}`"));
    Ok(FanFile {
        id: id.ok_or_else(|| missing("id"))?,
        name,
        dim: dim.ok_or_else(|| missing("dim"))?,
        rays: rays.ok_or_else(|| missing("rays"))?,
        max_cones: cones.ok_or_else(|| missing("cones"))?,
        expected,
    })
}

fn set_once<T>(
    slot: &mut Option<T>,
    value: T,
    dup: impl FnOnce() -> HarnessError,
) -> Result<(), HarnessError> {
    if slot.is_some() {
        return Err(dup());
    }
    *slot = Some(value);
    Ok(())
}

fn parse_row<T: std::str::FromStr>(row: &str) -> Result<Vec<T>, String> {
    row.split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("cannot parse `{t}` as an integer")))
        .collect()
}
