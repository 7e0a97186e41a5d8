//! The Euler pairing on the Chow lattice of the quartic del Pezzo surface.

use equivkit::dp4geom::{enumerate_lines, picard_data, SurfaceDP4};
use equivkit::k0euler::{fmt_entry, ChowVector, EulerLattice};

fn main() -> equivkit::Result<()> {
    let p = picard_data(&enumerate_lines(&SurfaceDP4::standard())?)?;
    let e = EulerLattice::from_picard(&p)?;
    println!("chi on (1, L1..L6, p/2):");
    for row in e.euler_gram() {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>4}", fmt_entry(x))).collect();
        println!("  {}", cells.join(" "));
    }
    let o = ChowVector::new(1, [0; 6], 0);
    let point = ChowVector::new(0, [0; 6], 2);
    println!("chi(O, O) = {}, chi(O, O_p) = {}", e.euler_pairing(&o, &o), e.euler_pairing(&o, &point));

    // line bundles are exceptional
    let l1 = e.ch_line_bundle([1, 0, 0, 0, 0, 0]);
    println!("ch(O(L1)) = {:?}, chi = {}, in ch(K0): {}", l1.coords(), e.euler_pairing(&l1, &l1), e.in_k0(&l1));
    println!("K0 splitting: {:?}", e.k0_decomposition_check());
    Ok(())
}
