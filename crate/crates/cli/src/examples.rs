//! Regenerates the worked examples and compares them with a hand-typed
//! transcription.

use centraliser::maps::{phi_left_inverse, phi_prime, psi_with_positions};
use centraliser::perm::{canonical_factorisation, initial_increasing_subsequence};
use centraliser::solver::{build_a, invert_unitriangular};
use centraliser::{Permutation, Result, Side, Subsystem, SystemOptions};

use crate::render::{self, paren};

pub const EXPECTED: &str = include_str!("../fixtures/worked_examples.txt");

/// Row and column order of the degree-3 tables.
const S3_ORDER: [&str; 6] = ["1,2,3", "2,1,3", "1,3,2", "2,3,1", "3,1,2", "3,2,1"];

fn perm(s: &str) -> Result<Permutation> {
    s.parse()
}

fn system(side: Side, n: usize, r: usize) -> Result<Subsystem> {
    let order = centraliser::basis::enumerate_basis(side, n, r, &Default::default())?;
    let wanted: Vec<Permutation> = S3_ORDER
        .iter()
        .map(|s| perm(s))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| order.contains(p))
        .collect();
    let opts = SystemOptions {
        order: Some(wanted),
        ..Default::default()
    };
    build_a(side, n, r, &opts)
}

fn schur_section(n: usize, r: usize) -> Result<String> {
    let sys = system(Side::Schur, n, r)?;
    let mut out = format!("== schur n={n} r={r}\n");
    out.push_str(&render::table(&[
        ("sigma", sys.basis.iter().map(paren).collect()),
        ("i", sys.selectors.iter().map(|s| paren(&s.row)).collect()),
        ("j", sys.selectors.iter().map(|s| paren(&s.col)).collect()),
    ]));
    out.push('\n');
    out.push_str(&render::system(&sys));
    out.push_str("\nA =\n");
    out.push_str(&render::unitriangular(&sys.matrix));
    out.push('\n');
    out.push_str(&render::solution(&sys, &invert_unitriangular(&sys.matrix)?));
    Ok(out)
}

/// Values of `w` at the positions its selector leaves out of the column.
fn kept_values(w: &Permutation, col: &[usize]) -> String {
    let kept: Vec<String> = (1..=w.degree())
        .filter(|a| !col.contains(a))
        .map(|a| w.apply(a).to_string())
        .collect();
    if kept.len() == 1 {
        kept[0].clone()
    } else {
        paren(kept.join(","))
    }
}

fn partition_section(n: usize, r: usize, with_solution: bool) -> Result<String> {
    let sys = system(Side::Partition, n, r)?;
    let mut out = format!("== partition n={n} r={r}\n");
    out.push_str(&render::table(&[
        ("w", sys.basis.iter().map(paren).collect()),
        (
            "s",
            sys.basis
                .iter()
                .zip(&sys.selectors)
                .map(|(w, s)| kept_values(w, s.col.entries()))
                .collect(),
        ),
        ("i", sys.selectors.iter().map(|s| render::subscript(&s.row)).collect()),
        ("j", sys.selectors.iter().map(|s| render::subscript(&s.col)).collect()),
    ]));
    if with_solution {
        out.push('\n');
        out.push_str(&render::system(&sys));
    }
    out.push_str("\nA =\n");
    out.push_str(&render::unitriangular(&sys.matrix));
    if with_solution {
        out.push('\n');
        out.push_str(&render::solution(&sys, &invert_unitriangular(&sys.matrix)?));
    }
    Ok(out)
}

fn free_choice(w: &Permutation, n: usize, r: usize, values: &[usize]) -> Result<String> {
    let inverse = w.inverse();
    let positions: Vec<usize> = values.iter().map(|&v| inverse.apply(v)).collect();
    let sel = psi_with_positions(w, n, r, &positions)?;
    let s = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    Ok(format!("r={r} s=({s}) (i,j) = ({},{})\n", paren(&sel.row), paren(&sel.col)))
}

/// The full worked-examples report.
pub fn generate() -> Result<String> {
    let mut sections = Vec::new();

    let y = [5, 2, 1, 3, 7, 4, 6, 9];
    let run = initial_increasing_subsequence(&y)?;
    let word = |v: &[usize]| paren(v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    sections.push(format!(
        "== initial increasing subsequence\ny = {}\nM = {}\n",
        word(&y),
        word(&run.values)
    ));

    let sigma = perm("4,2,1,7,3,8,9,6,5")?;
    let factorisation = canonical_factorisation(&sigma);
    let sel = phi_prime(&sigma);
    let id = Permutation::identity(9);
    let longest = Permutation::longest(9);
    let show = |p: &Permutation| {
        let s = phi_prime(p);
        format!("({},{})", paren(&s.row), paren(&s.col))
    };
    sections.push(format!(
        "== canonical factorisation\nsigma = {}\npi = {factorisation}\nk = {}\nphi'(sigma) = {}\nphi'(id) = {}\nphi'(sigma_0) = {}\n",
        paren(&sigma),
        factorisation.len(),
        show(&sigma),
        show(&id),
        show(&longest),
    ));

    let recovered = phi_left_inverse(&sel)?;
    sections.push(format!(
        "== phi' left inverse\n(i,j) = ({},{})\np = {}\nsigma = {}\n",
        paren(&sel.row),
        paren(&sel.col),
        canonical_factorisation(&recovered),
        paren(&recovered),
    ));

    sections.push(schur_section(3, 3)?);
    sections.push(schur_section(2, 3)?);

    let w = sigma.clone();
    let llis = centraliser::perm::oracle::llis(w.word());
    let mut choices = format!("== partition n=9 free choices\nw = {}\nLLIS(w) = {llis}\n", paren(&w));
    choices.push_str(&free_choice(&w, 9, 5, &[2, 3, 8, 9])?);
    choices.push_str(&free_choice(&w, 9, 6, &[2, 3, 8])?);
    sections.push(choices);

    sections.push(partition_section(3, 2, false)?);
    sections.push(partition_section(3, 1, true)?);

    Ok(sections.join("\n"))
}

/// First differing line, 1-based, with both versions.
pub fn first_difference(expected: &str, actual: &str) -> Option<(usize, String, String)> {
    let mut e = expected.lines();
    let mut a = actual.lines();
    for line in 1.. {
        match (e.next(), a.next()) {
            (None, None) => return (expected != actual).then(|| (line, "<eof>".into(), "<eof>".into())),
            (x, y) if x == y => continue,
            (x, y) => {
                return Some((
                    line,
                    x.unwrap_or("<eof>").to_string(),
                    y.unwrap_or("<eof>").to_string(),
                ))
            }
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regenerated_matches_transcription() {
        let actual = generate().unwrap();
        assert_eq!(first_difference(EXPECTED, &actual), None);
    }
}
