use gsdec_bench::fixtures;
use gsdec_core::interp::{build_compressed_system, build_system};

#[test]
fn fixtures_build_both_system_forms() {
    for fx in fixtures() {
        let f = &*fx.field;
        let full = build_system(f, &fx.received, &fx.params).unwrap();
        assert_eq!(
            full.shape(),
            (fx.params.equations(), fx.params.unknowns()),
            "{}",
            fx.name
        );
        for mv in [&fx.reencoded, &fx.projected] {
            let sys = build_compressed_system(f, mv, &fx.params).unwrap();
            assert_eq!(
                sys.shape().0,
                full.shape().0 - sys.pruned_rows,
                "{}",
                fx.name
            );
        }
    }
}
