//! Symmetrized operators frozen as text. Regenerate with `UPDATE_GOLDEN=1`.

use std::path::PathBuf;

use nilpair_core::pair_catalog::{get_case, CaseId};
use nilpair_core::symm_calculus::pipeline::golden_text;
use nilpair_core::symm_calculus::{exact_hilbert, StepTwoAlgebra};

fn check(name: &str, text: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, text).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(text, want, "{name} drifted");
}

fn generator(line: u8, j: usize) -> String {
    let case = get_case(CaseId::line(line)).unwrap();
    let alg = StepTwoAlgebra::from_case(&case).unwrap();
    let rho = exact_hilbert(&case).unwrap();
    let d = alg.symmetrizer().symmetrize(&rho[j]);
    golden_text(&alg, &d)
}

fn mixed(line: u8) -> usize {
    let case = get_case(CaseId::line(line)).unwrap();
    case.bidegrees.iter().position(|&(a, b)| a > 0 && b == 1).unwrap()
}

fn sublaplacian(line: u8) -> usize {
    let case = get_case(CaseId::line(line)).unwrap();
    case.bidegrees.iter().position(|&b| b == (2, 0)).unwrap()
}

#[test]
fn heisenberg_sublaplacian() {
    check("line1_sublaplacian.txt", &generator(1, sublaplacian(1)));
}

#[test]
fn line_ten_sublaplacian() {
    check("line10_sublaplacian.txt", &generator(10, sublaplacian(10)));
}

#[test]
fn line_four_mixed() {
    check("line4_mixed.txt", &generator(4, mixed(4)));
}

#[test]
fn line_ten_mixed() {
    check("line10_mixed.txt", &generator(10, mixed(10)));
}
