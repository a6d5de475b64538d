// Example: print the polar tower, Lê profile, and dagger check for a germ.
// Run with `cargo run -p lecycles --example explore`.
use lecycles::lenum::{dagger_check, le_profile};
use lecycles::pipeline::{build_polar_tower, Germ};
use lecycles::poly::{parse, rat_int, Frame, Ring};

fn main() {
    let ring = Ring::new(&["t", "x", "y"]).unwrap();
    let f = parse("x^3 + y^3 + t*x*y", &ring).unwrap();
    let germ = Germ::new(&ring, f, None).unwrap();
    let tower = build_polar_tower(&germ, &Frame::identity(3)).unwrap();
    println!("s = {}", tower.s());
    for (k, level) in tower.gamma_levels() {
        println!(
            "Gamma^{k}: dim {:?}, rounds {}, basis {:?}",
            level.dim,
            level.saturation_rounds,
            level
                .ideal
                .basis(lecycles::poly::MonomialOrder::DegRevLex)
        );
    }
    let origin = vec![rat_int(0); 3];
    println!("profile at 0: {:?}", le_profile(&tower, &origin));
    println!("dagger at 0: {:?}", dagger_check(&tower, &origin));
    let q = vec![rat_int(1), rat_int(0), rat_int(0)];
    println!("profile at (1,0,0): {:?}", le_profile(&tower, &q));
    println!("dagger at (1,0,0): {:?}", dagger_check(&tower, &q));
}
