//! Quantum group relations on V̄^⊗r and the commutation with the Hecke action.

use doubled_hecke::qgroup::{phi_operator, verify_qgroup_relations, QGenerator};
use doubled_hecke::scalar::ExactField;
use doubled_hecke::tensor::TensorShape;

fn main() {
    let f = ExactField;
    let shape = TensorShape::enhanced(2, 2);
    let e1 = phi_operator(QGenerator::E(1), &shape, &f).unwrap();
    println!("Φ(E1) on V̄^⊗2 (n = 2): {} nonzero entries", e1.nnz());

    let report = verify_qgroup_relations(&shape, &f);
    print!("{report}");
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
