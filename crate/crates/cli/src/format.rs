//! The algebra definition file format and its validation.
//!
//! One JSON container describes an algebra by structure constants:
//!
//! ```json
//! {
//!   "name": "compatible-pair-dim2",
//!   "dim": 2,
//!   "alpha": [["1", "0"], ["0", "1"]],
//!   "brackets": {
//!     "pi1": [{"i": 2, "j": 2, "k": 1, "c": "1"}],
//!     "pi2": [{"i": 2, "j": 1, "k": 1, "c": "1"}]
//!   },
//!   "module": {
//!     "dim": 2,
//!     "beta": [["1", "0"], ["0", "1"]],
//!     "actions": {"mL1": [...], "mR1": [...], "mL2": [...], "mR2": [...]}
//!   }
//! }
//! ```
//!
//! An entry `{i, j, k, c}` means the operation applied to the `i`-th and
//! `j`-th basis vectors gains `c` times the `k`-th output basis vector;
//! indices are 1-based, omitted entries are zero and duplicate `(i,j,k)`
//! triples are rejected. Scalars are quoted literals `-?[0-9]+(/[1-9][0-9]*)?`.
//! `pi2` is optional: one bracket describes a plain Hom-Leibniz algebra,
//! two a compatible pair. The optional `module` block carries coefficient
//! actions: `mL1`/`mR1` always, `mL2`/`mR2` exactly when `pi2` is present.

use std::path::Path;

use serde::{Deserialize, Serialize};

use homleib_core::cochain::Cochain;
use homleib_core::matrix::DenseMatrix;
use homleib_core::scalar::{format_scalar, parse_scalar_literal};
use homleib_core::space::HomVectorSpace;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub alpha: Vec<Vec<String>>,
    pub brackets: BracketsSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSection>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketsSection {
    pub pi1: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi2: Option<Vec<Entry>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSection {
    pub dim: usize,
    pub beta: Vec<Vec<String>>,
    pub actions: ActionsSection,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionsSection {
    #[serde(rename = "mL1")]
    pub m_l1: Vec<Entry>,
    #[serde(rename = "mR1")]
    pub m_r1: Vec<Entry>,
    #[serde(rename = "mL2", default, skip_serializing_if = "Option::is_none")]
    pub m_l2: Option<Vec<Entry>>,
    #[serde(rename = "mR2", default, skip_serializing_if = "Option::is_none")]
    pub m_r2: Option<Vec<Entry>>,
}

/// File contents converted to core values, still unvalidated as algebra
/// axioms go (the `verify` command checks those).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedAlgebra {
    pub name: String,
    pub space: HomVectorSpace,
    pub pi1: Cochain,
    pub pi2: Option<Cochain>,
    pub module: Option<LoadedModule>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedModule {
    pub coeff: HomVectorSpace,
    pub left1: Cochain,
    pub right1: Cochain,
    pub left2: Option<Cochain>,
    pub right2: Option<Cochain>,
}

impl LoadedAlgebra {
    pub fn is_compatible(&self) -> bool {
        self.pi2.is_some()
    }
}

fn parse_matrix(rows: &[Vec<String>], dim: usize, what: &str) -> Result<DenseMatrix, String> {
    if rows.len() != dim {
        return Err(format!("{what}: expected {dim} rows, found {}", rows.len()));
    }
    let mut m = DenseMatrix::zeros(dim, dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(format!(
                "{what}: row {} has {} entries, expected {dim}",
                r + 1,
                row.len()
            ));
        }
        for (c, literal) in row.iter().enumerate() {
            let v = parse_scalar_literal(literal).map_err(|_| {
                format!("{what}[{}][{}]: invalid rational literal {literal:?}", r + 1, c + 1)
            })?;
            m.set(r, c, v);
        }
    }
    Ok(m)
}

/// Converts a sparse entry list into a cochain with the given slot and
/// output dimensions (`dims.0` for `i`, `dims.1` for `j`, `out` for `k`).
pub fn entries_to_cochain(
    entries: &[Entry],
    sources: Vec<HomVectorSpace>,
    target: HomVectorSpace,
    what: &str,
) -> Result<Cochain, String> {
    assert_eq!(sources.len(), 2, "entry lists describe bilinear maps");
    let (d1, d2, out) = (sources[0].dim(), sources[1].dim(), target.dim());
    let mut seen = std::collections::HashSet::new();
    let mut cochain = Cochain::zero(sources, target);
    for (pos, e) in entries.iter().enumerate() {
        let at = |field: &str| format!("{what}[{}].{field}", pos + 1);
        if e.i == 0 || e.i > d1 {
            return Err(format!("{}: index {} out of range 1..={d1}", at("i"), e.i));
        }
        if e.j == 0 || e.j > d2 {
            return Err(format!("{}: index {} out of range 1..={d2}", at("j"), e.j));
        }
        if e.k == 0 || e.k > out {
            return Err(format!("{}: index {} out of range 1..={out}", at("k"), e.k));
        }
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(format!(
                "{what}[{}]: duplicate entry ({}, {}, {})",
                pos + 1,
                e.i,
                e.j,
                e.k
            ));
        }
        let value = parse_scalar_literal(&e.c)
            .map_err(|_| format!("{}: invalid rational literal {:?}", at("c"), e.c))?;
        cochain.set_coeff(&[e.i - 1, e.j - 1], e.k - 1, value);
    }
    Ok(cochain)
}

/// Structural validation and conversion of a parsed file.
pub fn load(file: &AlgebraFile) -> Result<LoadedAlgebra, String> {
    if file.dim == 0 {
        return Err("dim: must be at least 1".into());
    }
    let alpha = parse_matrix(&file.alpha, file.dim, "alpha")?;
    let space = HomVectorSpace::new(file.dim, alpha).map_err(|e| format!("alpha: {e}"))?;

    let endo = |entries: &[Entry], what: &str| {
        entries_to_cochain(entries, vec![space.clone(); 2], space.clone(), what)
    };
    let pi1 = endo(&file.brackets.pi1, "brackets.pi1")?;
    let pi2 = file
        .brackets
        .pi2
        .as_deref()
        .map(|e| endo(e, "brackets.pi2"))
        .transpose()?;

    let module = match &file.module {
        None => None,
        Some(section) => {
            if section.dim == 0 {
                return Err("module.dim: must be at least 1".into());
            }
            let beta = parse_matrix(&section.beta, section.dim, "module.beta")?;
            let coeff =
                HomVectorSpace::new(section.dim, beta).map_err(|e| format!("module.beta: {e}"))?;
            let left_shape = vec![space.clone(), coeff.clone()];
            let right_shape = vec![coeff.clone(), space.clone()];
            let left1 = entries_to_cochain(
                &section.actions.m_l1,
                left_shape.clone(),
                coeff.clone(),
                "module.actions.mL1",
            )?;
            let right1 = entries_to_cochain(
                &section.actions.m_r1,
                right_shape.clone(),
                coeff.clone(),
                "module.actions.mR1",
            )?;
            match (&pi2, &section.actions.m_l2, &section.actions.m_r2) {
                (Some(_), Some(_), Some(_)) | (None, None, None) => {}
                (Some(_), _, _) => {
                    return Err(
                        "module.actions: a compatible algebra needs both mL2 and mR2".into()
                    )
                }
                (None, _, _) => {
                    return Err(
                        "module.actions: mL2/mR2 are only allowed when pi2 is present".into()
                    )
                }
            }
            let left2 = section
                .actions
                .m_l2
                .as_deref()
                .map(|e| entries_to_cochain(e, left_shape, coeff.clone(), "module.actions.mL2"))
                .transpose()?;
            let right2 = section
                .actions
                .m_r2
                .as_deref()
                .map(|e| entries_to_cochain(e, right_shape, coeff.clone(), "module.actions.mR2"))
                .transpose()?;
            Some(LoadedModule { coeff, left1, right1, left2, right2 })
        }
    };

    Ok(LoadedAlgebra {
        name: file.name.clone(),
        space,
        pi1,
        pi2,
        module,
    })
}

/// Reads and validates an algebra file from disk; errors carry a
/// line/column or field diagnostic.
pub fn parse_algebra_file(path: &Path) -> Result<(AlgebraFile, LoadedAlgebra), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let file: AlgebraFile = serde_json::from_str(&text).map_err(|e| {
        format!("{}:{}:{}: {e}", path.display(), e.line(), e.column())
    })?;
    let loaded = load(&file).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((file, loaded))
}

/// Reads a bare matrix file (a JSON array of rows of rational literals).
pub fn parse_matrix_file(path: &Path, dim: usize) -> Result<DenseMatrix, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let rows: Vec<Vec<String>> = serde_json::from_str(&text).map_err(|e| {
        format!("{}:{}:{}: {e}", path.display(), e.line(), e.column())
    })?;
    parse_matrix(&rows, dim, "operator").map_err(|e| format!("{}: {e}", path.display()))
}

/// Reads a bare entry-list file (a JSON array of `{i, j, k, c}`) as a
/// bilinear cochain on the given space.
pub fn parse_entries_file(path: &Path, space: &HomVectorSpace) -> Result<Cochain, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let entries: Vec<Entry> = serde_json::from_str(&text).map_err(|e| {
        format!("{}:{}:{}: {e}", path.display(), e.line(), e.column())
    })?;
    entries_to_cochain(&entries, vec![space.clone(); 2], space.clone(), "entries")
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn matrix_to_rows(m: &DenseMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| format_scalar(m.get(r, c))).collect())
        .collect()
}

/// Sparse entries of a bilinear cochain, sorted by `(i, j, k)`, 1-based.
pub fn cochain_to_entries(c: &Cochain) -> Vec<Entry> {
    use num_traits::Zero;
    let d1 = c.sources()[0].dim();
    let d2 = c.sources()[1].dim();
    let out = c.target().dim();
    let mut entries = Vec::new();
    for i in 0..d1 {
        for j in 0..d2 {
            for k in 0..out {
                let v = c.coeff(&[i, j], k);
                if !v.is_zero() {
                    entries.push(Entry {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        c: format_scalar(v),
                    });
                }
            }
        }
    }
    entries
}

/// Serializes core values back into the file schema. The inverse of
/// [`load`] up to entry ordering.
pub fn to_algebra_file(loaded: &LoadedAlgebra) -> AlgebraFile {
    AlgebraFile {
        name: loaded.name.clone(),
        dim: loaded.space.dim(),
        alpha: matrix_to_rows(loaded.space.twist()),
        brackets: BracketsSection {
            pi1: cochain_to_entries(&loaded.pi1),
            pi2: loaded.pi2.as_ref().map(cochain_to_entries),
        },
        module: loaded.module.as_ref().map(|m| ModuleSection {
            dim: m.coeff.dim(),
            beta: matrix_to_rows(m.coeff.twist()),
            actions: ActionsSection {
                m_l1: cochain_to_entries(&m.left1),
                m_r1: cochain_to_entries(&m.right1),
                m_l2: m.left2.as_ref().map(cochain_to_entries),
                m_r2: m.right2.as_ref().map(cochain_to_entries),
            },
        }),
    }
}

/// Stable pretty-printed JSON for an algebra file.
pub fn emit(file: &AlgebraFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("schema serializes");
    text.push('\n');
    text
}
