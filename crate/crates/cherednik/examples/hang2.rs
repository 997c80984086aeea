use cherednik::exact::scalar::{int, rat};
use cherednik::exact::tpoly::TPoly;
use cherednik::sra::element::{Algebra, SraElement};
use cherednik::dunkl::theta0::theta0_image;

fn main() {
    let alg = Algebra::symmetric(3, rat(2, 3), TPoly::zero()).unwrap();
    // theta0 of y_1^2 alone
    let y1 = SraElement::y(&alg, 0);
    let y1sq = y1.mul(&y1).unwrap();
    eprintln!("y1^2 terms: {}", y1sq.num_terms());
    let img = theta0_image(&y1sq).unwrap();
    eprintln!("y1^2 image terms: {}", img.terms().count());
    // theta0 of a product with a transposition
    let s = SraElement::group(&alg, cherednik::groups::element::GroupElement::transposition(3,0,1));
    let m = y1sq.mul(&s).unwrap();
    let img2 = theta0_image(&m).unwrap();
    eprintln!("with group: {}", img2.terms().count());
    let e = SraElement::symmetrizer(&alg);
    let p2 = cherednik::sra::ops::phi(&alg, 2);
    let ep2 = e.mul(&p2).unwrap();
    eprintln!("e*p2 terms: {}", ep2.num_terms());
    let img3 = theta0_image(&ep2).unwrap();
    eprintln!("e*p2 image terms: {}", img3.terms().count());
    let _ = int(0);
}
