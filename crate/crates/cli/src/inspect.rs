//! `inspect`: single-matroid queries selected by flags.

use ccix_core::analyze::{achieved_sizes, oxley_minor};
use ccix_core::transform::{cocircuits, dual, minor};
use ccix_core::{ElemSet, Matroid, MinorSpec};

use crate::error::CliError;
use crate::format::MatroidFile;

/// Parses `key=a,b;key=c` with the given keys; missing keys are empty.
fn parse_pairs<const N: usize>(m: &Matroid, text: &str, keys: [&str; N]) -> Result<[ElemSet; N], CliError> {
    let mut out = [ElemSet::EMPTY; N];
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected key=labels, got `{part}`")))?;
        let slot = keys
            .iter()
            .position(|k| *k == key.trim())
            .ok_or_else(|| CliError::Usage(format!("unknown key `{}` (expected {})", key.trim(), keys.join(", "))))?;
        for label in value.split(',').map(str::trim).filter(|l| !l.is_empty()) {
            let e = m
                .ground()
                .index_of(label)
                .filter(|&e| m.elements().contains(e))
                .ok_or_else(|| CliError::Usage(format!("unknown element `{label}`")))?;
            out[slot] = out[slot].with(e);
        }
    }
    Ok(out)
}

pub fn parse_minor_spec(m: &Matroid, text: &str) -> Result<MinorSpec, CliError> {
    let [deleted, contracted] = parse_pairs(m, text, ["del", "con"])?;
    MinorSpec::new(deleted, contracted).map_err(CliError::Core)
}

fn set_lines(m: &Matroid, sets: &[ElemSet]) -> String {
    sets.iter().map(|s| m.display(*s) + "\n").collect()
}

pub fn circuits(m: &Matroid) -> String {
    set_lines(m, m.circuits().as_slice())
}

pub fn cocircuit_list(m: &Matroid) -> Result<String, CliError> {
    Ok(set_lines(m, &cocircuits(m)?))
}

pub fn hyperplanes(m: &Matroid) -> Result<String, CliError> {
    Ok(set_lines(m, &m.hyperplanes()?))
}

pub fn dual_file(m: &Matroid, name: Option<&str>) -> Result<MatroidFile, CliError> {
    let d = dual(m)?;
    Ok(MatroidFile::circuits_of(&d, name.map(|n| format!("{n}*"))))
}

pub fn minor_file(m: &Matroid, name: Option<&str>, spec_text: &str) -> Result<MatroidFile, CliError> {
    let spec = parse_minor_spec(m, spec_text)?;
    let n = minor(m, &spec)?;
    Ok(MatroidFile::circuits_of(&n, name.map(|n| format!("{n} minor"))))
}

pub fn cc_sizes(m: &Matroid, cap: u64) -> Result<String, CliError> {
    let sizes: Vec<String> = achieved_sizes(m, cap)?.iter().map(usize::to_string).collect();
    Ok(sizes.join(",") + "\n")
}

pub fn oxley(m: &Matroid, text: &str) -> Result<String, CliError> {
    let [circuit, cocircuit] = parse_pairs(m, text, ["circuit", "cocircuit"])?;
    let nx = oxley_minor(m, circuit, cocircuit)?;
    let n = nx.matroid();
    let mut out = format!(
        "k: {}\ndeleted: {}\ncontracted: {}\nX: {}\nY: {}\nrank: {}\ncircuits:\n",
        nx.k(),
        m.display(nx.spec().deleted),
        m.display(nx.spec().contracted),
        m.display(nx.x()),
        m.display(nx.y()),
        n.rank(),
    );
    out += &set_lines(n, n.circuits().as_slice());
    Ok(out)
}
