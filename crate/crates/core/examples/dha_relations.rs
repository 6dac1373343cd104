//! Defining relations of the doubled Hecke algebra on V̄^⊗r.

use doubled_hecke::dha::{verify_dha_relations, xi_generator, DHGenerator};
use doubled_hecke::hecke::verify_hecke_relations;
use doubled_hecke::scalar::ExactField;
use doubled_hecke::tensor::TensorShape;

fn main() {
    let f = ExactField;
    let shape = TensorShape::enhanced(2, 3);
    let x2: DHGenerator = "x2:[2,1]".parse().unwrap();
    let op = xi_generator(&x2, &shape, &f).unwrap();
    println!("{x2} acts with {} nonzero entries", op.nnz());

    let hecke = verify_hecke_relations(&shape, &f);
    let dha = verify_dha_relations(&shape, &f);
    print!("{hecke}{dha}");
    let ok = hecke.all_passed() && dha.all_passed();
    std::process::exit(if ok { 0 } else { 1 });
}
