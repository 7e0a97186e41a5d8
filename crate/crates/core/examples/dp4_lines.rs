//! The 16 lines on the quartic del Pezzo surface and its Picard lattice.

use equivkit::dp4geom::{enumerate_lines, perm_order, picard_data, SurfaceDP4};

fn main() -> equivkit::Result<()> {
    let s = SurfaceDP4::standard();
    let conf = enumerate_lines(&s)?;
    println!("{} lines", conf.lines.len());
    for (i, l) in conf.lines.iter().enumerate() {
        let mark = if conf.gamma_invariant().contains(&i) { "*" } else { " " };
        println!("{mark}{i:>2}  {}", l.key());
    }
    println!("base line {} meets {:?}", conf.base, conf.neighbors(conf.base));
    println!("gamma has order {}, beta order {}", perm_order(&conf.gamma_perm), perm_order(&conf.beta_perm));

    let p = picard_data(&conf)?;
    println!("basis lines {:?}, relabeling {:?}, all reference matrices matched: {}", p.basis, p.alignment.relabeling, p.alignment.full());
    println!("-K = {:?}, (-K)^2 = {}", p.minus_k, p.dot(&p.minus_k, &p.minus_k));
    let g = p.image_group()?;
    println!("image of the action on Pic has order {}", g.order());
    println!("H1 vanishes for every subgroup: {}", p.lattice()?.h1_all_subgroups()?.passes());
    Ok(())
}
