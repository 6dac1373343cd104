//! q-Schur duality on V^⊗r: U_q(gl_n) and H_r are each other's commutants.

use doubled_hecke::duality::verify_q_schur;
use doubled_hecke::scalar::ExactField;

fn main() {
    let f = ExactField;
    let mut ok = true;
    for (n, r) in [(2, 2), (2, 3), (3, 2)] {
        let report = verify_q_schur(n, r, &f);
        print!("{report}");
        ok &= report.double_centralizer;
    }
    std::process::exit(if ok { 0 } else { 1 });
}
