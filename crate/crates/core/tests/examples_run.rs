macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(
    maximum_matching_example,
    "maximum_matching.rs",
    maximum_matching_runs
);
example!(
    gallai_edmonds_example,
    "gallai_edmonds.rs",
    gallai_edmonds_runs
);
example!(
    factor_components_example,
    "factor_components.rs",
    factor_components_runs
);
example!(
    kotzig_lovasz_example,
    "kotzig_lovasz.rs",
    kotzig_lovasz_runs
);
example!(
    basilica_order_example,
    "basilica_order.rs",
    basilica_order_runs
);
example!(attachments_example, "attachments.rs", attachments_runs);
example!(
    export_formats_example,
    "export_formats.rs",
    export_formats_runs
);
example!(
    oracle_cross_check_example,
    "oracle_cross_check.rs",
    oracle_cross_check_runs
);
