use sophomore::asymptotics::*;
use sophomore::eval::EvalPoint;
fn main() {
    for t in [-10.0, -15.0, -21.0, -30.0] {
        match solve_saddle(t, 1.0) {
            Ok(s) => println!("t={t}: y*={:.6} res={:.2e} iters={}", s.y, s.residual, s.iterations),
            Err(e) => println!("t={t}: ERR {e}"),
        }
        let c = approx_neg_t_combined(EvalPoint::real(t, 1.0)).value.re;
        let a = approx_neg_t_erfi(EvalPoint::real(t, 1.0)).value.re;
        println!("   combined {c:.6} vs erfi {a:.6}");
    }
}
