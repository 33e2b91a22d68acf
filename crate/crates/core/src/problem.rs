//! Problem files: a TOML description of `P`, the action of `L` and the form.
//!
//! ```toml
//! p = 5
//! seed = 0
//!
//! [[component]]
//! exponent = 1
//! rank = 2
//!
//! [l]
//! orders = [4, 4]
//!
//! [[action]]          # one per generator of L
//! matrices = [[[2, 0], [0, 1]]]   # one matrix per component
//!
//! [[action]]
//! matrices = [[[1, 0], [0, 2]]]
//!
//! [[form]]            # t_ij = exp(2πi · exponent / order), 1-based i < j
//! i = 1
//! j = 2
//! order = 4
//! exponent = 1
//! ```

use std::ops::Range;
use std::path::Path;

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::abelian::FinAbGroup;
use crate::cocycle::AlternatingForm;
use crate::error::{Error, Result};
use crate::pgroup::{Component, LAction, PGroupData};
use crate::scalar::RootScalar;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    p: Spanned<u64>,
    seed: Option<u64>,
    #[serde(default)]
    component: Vec<Spanned<RawComponent>>,
    l: Spanned<RawL>,
    #[serde(default)]
    action: Vec<Spanned<RawAction>>,
    #[serde(default)]
    form: Vec<Spanned<RawForm>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    exponent: u32,
    rank: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawL {
    orders: Vec<u64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    matrices: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawForm {
    i: usize,
    j: usize,
    order: u64,
    exponent: i64,
}

/// A form value `t_ij`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormEntry {
    pub i: usize,
    pub j: usize,
    pub order: u64,
    pub exponent: i64,
}

/// The plain contents of a problem file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub p: u64,
    pub seed: Option<u64>,
    pub components: Vec<Component>,
    pub l_orders: Vec<u64>,
    /// `[generator][component]` matrices.
    pub actions: Vec<Vec<Vec<Vec<i64>>>>,
    pub form: Vec<FormEntry>,
}

impl ProblemFile {
    /// TOML text that parses back to `self`.
    pub fn to_toml(&self) -> String {
        let mut s = format!("p = {}\n", self.p);
        if let Some(seed) = self.seed {
            s += &format!("seed = {seed}\n");
        }
        for c in &self.components {
            s += &format!(
                "\n[[component]]\nexponent = {}\nrank = {}\n",
                c.exponent, c.rank
            );
        }
        s += &format!("\n[l]\norders = {:?}\n", self.l_orders);
        for a in &self.actions {
            s += &format!("\n[[action]]\nmatrices = {a:?}\n");
        }
        for t in &self.form {
            s += &format!(
                "\n[[form]]\ni = {}\nj = {}\norder = {}\nexponent = {}\n",
                t.i, t.j, t.order, t.exponent
            );
        }
        s
    }
}

/// A validated instance.
#[derive(Clone, Debug)]
pub struct Problem {
    pub file: ProblemFile,
    pub pg: PGroupData,
    pub act: LAction,
    pub form: AlternatingForm,
}

impl Problem {
    pub fn p(&self) -> u64 {
        self.pg.p
    }

    pub fn seed(&self) -> u64 {
        self.file.seed.unwrap_or(0)
    }

    pub fn l(&self) -> &FinAbGroup {
        &self.act.l
    }

    /// Validates a [`ProblemFile`] built in code.
    pub fn from_file(file: ProblemFile) -> Result<Problem> {
        let pg = PGroupData::new(file.p, file.components.clone())?;
        let l = FinAbGroup::new(file.l_orders.clone());
        let act = LAction::new(&pg, l.clone(), file.actions.clone())?;
        let form = build_form(&l, &file.form)?;
        Ok(Problem {
            file,
            pg,
            act,
            form,
        })
    }
}

fn build_form(l: &FinAbGroup, entries: &[FormEntry]) -> Result<AlternatingForm> {
    let mut out = Vec::new();
    for t in entries {
        if t.i == 0 || t.j == 0 || t.i > l.rank() || t.j > l.rank() || t.i == t.j {
            return Err(Error::validation(format!(
                "form entry ({}, {}) needs distinct indices in 1..={}",
                t.i,
                t.j,
                l.rank()
            )));
        }
        if t.order == 0 {
            return Err(Error::validation("form order must be positive"));
        }
        out.push((t.i - 1, t.j - 1, RootScalar::new(t.order, t.exponent)));
    }
    AlternatingForm::new(l, &out)
}

fn line_of(text: &str, span: Range<usize>) -> usize {
    text[..span.start.min(text.len())].matches('\n').count() + 1
}

fn at(text: &str, span: Range<usize>, e: Error) -> Error {
    let line = Some(line_of(text, span));
    match e {
        Error::Validation { reason, .. } => Error::Validation { line, reason },
        other => Error::Validation {
            line,
            reason: other.to_string(),
        },
    }
}

/// Parses and validates problem text. Syntax errors become
/// [`Error::Parse`], constraint violations [`Error::Validation`], both
/// with the line of the offending entry.
pub fn parse_str(text: &str) -> Result<Problem> {
    let raw: RawFile = toml::from_str(text).map_err(|e| Error::Parse {
        line: e.span().map_or(1, |s| line_of(text, s)),
        reason: e.message().trim().to_string(),
    })?;
    let p = *raw.p.get_ref();
    let components: Vec<Component> = raw
        .component
        .iter()
        .map(|c| Component {
            exponent: c.get_ref().exponent,
            rank: c.get_ref().rank,
        })
        .collect();
    if components.is_empty() {
        return Err(Error::Validation {
            line: Some(line_of(text, raw.p.span())),
            reason: "at least one [[component]] is required".into(),
        });
    }
    let pg = PGroupData::new(p, components.clone()).map_err(|e| {
        let bad = raw
            .component
            .iter()
            .find(|c| c.get_ref().exponent == 0 || c.get_ref().rank == 0);
        let span = match (&e, bad) {
            (Error::CompositeCharacteristic(_), _) | (_, None) => raw.p.span(),
            (_, Some(c)) => c.span(),
        };
        at(text, span, e)
    })?;
    let orders = raw.l.get_ref().orders.clone();
    if orders.iter().any(|&d| d < 2) {
        return Err(at(
            text,
            raw.l.span(),
            Error::validation("orders of L must be at least 2"),
        ));
    }
    let l = FinAbGroup::new(orders.clone());
    let actions: Vec<Vec<Vec<Vec<i64>>>> = raw
        .action
        .iter()
        .map(|a| a.get_ref().matrices.clone())
        .collect();
    let act = LAction::new(&pg, l.clone(), actions.clone()).map_err(|e| {
        let span = match &e {
            Error::Validation { reason, .. } => reason
                .strip_prefix("generator ")
                .and_then(|r| r.split(|c: char| !c.is_ascii_digit()).next())
                .and_then(|d| d.parse::<usize>().ok())
                .and_then(|j| raw.action.get(j - 1))
                .map_or(raw.l.span(), |a| a.span()),
            _ => raw.l.span(),
        };
        at(text, span, e)
    })?;
    let mut form_entries = Vec::new();
    for t in &raw.form {
        let r = t.get_ref();
        let entry = FormEntry {
            i: r.i,
            j: r.j,
            order: r.order,
            exponent: r.exponent,
        };
        build_form(&l, std::slice::from_ref(&entry)).map_err(|e| at(text, t.span(), e))?;
        form_entries.push(entry);
    }
    let form = build_form(&l, &form_entries).map_err(|e| {
        let span = raw.form.first().map_or(raw.l.span(), |t| t.span());
        at(text, span, e)
    })?;
    let file = ProblemFile {
        p,
        seed: raw.seed,
        components,
        l_orders: orders,
        actions,
        form: form_entries,
    };
    Ok(Problem {
        file,
        pg,
        act,
        form,
    })
}

pub fn parse(path: &Path) -> Result<Problem> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUANTUM_PLANE: &str = r#"
p = 5

[[component]]
exponent = 1
rank = 2

[l]
orders = [4, 4]

[[action]]
matrices = [[[2, 0], [0, 1]]]

[[action]]
matrices = [[[1, 0], [0, 2]]]

[[form]]
i = 1
j = 2
order = 4
exponent = 1
"#;

    #[test]
    fn parses_quantum_plane() {
        let pr = parse_str(QUANTUM_PLANE).unwrap();
        assert_eq!(pr.pg.order(), 25);
        assert_eq!(pr.l().order(), 16);
        assert_eq!(pr.form.value(0, 1), RootScalar::new(4, 1));
        assert_eq!(pr.seed(), 0);
        let again = parse_str(&pr.file.to_toml()).unwrap();
        assert_eq!(again.file, pr.file);
    }

    #[test]
    fn non_commuting_matrices_are_rejected() {
        let text = QUANTUM_PLANE
            .replace("[[2, 0], [0, 1]]", "[[0, 1], [1, 0]]")
            .replace("orders = [4, 4]", "orders = [2, 4]");
        match parse_str(&text) {
            Err(Error::Validation {
                line: Some(_),
                reason,
            }) => assert!(reason.contains("commute"), "{reason}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_form_order_points_at_entry() {
        let text = QUANTUM_PLANE.replace("order = 4", "order = 8");
        match parse_str(&text) {
            Err(Error::Validation { line: Some(l), .. }) => assert_eq!(l, 17),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_and_p_order_errors() {
        assert!(matches!(
            parse_str("p = 5\n[l]\norders = [4,\n"),
            Err(Error::Parse { .. })
        ));
        let text = QUANTUM_PLANE.replace("orders = [4, 4]", "orders = [5, 4]");
        assert!(matches!(
            parse_str(&text),
            Err(Error::Validation { line: Some(8), .. })
        ));
        let text = QUANTUM_PLANE.replace("p = 5", "p = 6");
        assert!(matches!(
            parse_str(&text),
            Err(Error::Validation { line: Some(2), .. })
        ));
    }
}
