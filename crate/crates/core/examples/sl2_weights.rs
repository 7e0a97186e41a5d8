//! Highest-weight vectors of sl2 in the exterior square of Sym^n.

use equivkit::sl2rep::{decompose_wedge, highest_weight_vectors, lowering_orbit, sym_module, WedgeModule};

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let w = WedgeModule::new(sym_module(n)).module;
    println!("relations hold: {}", w.check_relations().all());
    for (m, mult) in decompose_wedge(n) {
        println!("Sym^{m} (multiplicity {mult})");
        for v in highest_weight_vectors(&w, m as i64) {
            for (k, x) in lowering_orbit(&w, &v, m).iter().enumerate() {
                println!("  x{:<3} = {}", m as i64 - 2 * k as i64, w.render(x));
            }
        }
    }
}
