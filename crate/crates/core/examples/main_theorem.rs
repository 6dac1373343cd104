//! The Levi quantum group and the doubled Hecke algebra as mutual commutants
//! on V̄^⊗r.

use doubled_hecke::duality::{certify, decomposition_audit};
use doubled_hecke::scalar::ScalarMode;

fn main() {
    let mut ok = true;
    for (n, r) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
        match certify(n, r, false, &ScalarMode::Exact, 0) {
            Ok(report) => {
                let audit = decomposition_audit(n, r);
                print!("{report}");
                println!("  matches dimension table  {}", audit.matches(&report));
                ok &= audit.matches(&report);
            }
            Err(e) => {
                eprintln!("n = {n}, r = {r}: {e}");
                ok = false;
            }
        }
    }
    std::process::exit(if ok { 0 } else { 1 });
}
