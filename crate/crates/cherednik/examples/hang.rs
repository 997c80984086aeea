use cherednik::exact::scalar::rat;
use cherednik::exact::tpoly::TPoly;
use cherednik::sra::element::{Algebra, SraElement};
use cherednik::sra::ops::{phi, spherical};
use cherednik::dunkl::theta0::theta0_image;

fn main() {
    let alg = Algebra::symmetric(3, rat(2, 3), TPoly::zero()).unwrap();
    eprintln!("built algebra");
    let p2 = phi(&alg, 2);
    let sph = spherical(&p2);
    eprintln!("sph terms: {}", sph.num_terms());
    eprintln!("starting image");
    let img = theta0_image(&sph).unwrap();
    eprintln!("image terms: {}", img.terms().count());
    let c = img.collapse_on_invariants();
    eprintln!("collapsed: {}", c);
    let _ = SraElement::one(&alg);
}
