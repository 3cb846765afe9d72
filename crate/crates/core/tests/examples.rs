macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(counterexample, "counterexample.rs", counterexample_example_runs);
example!(classical, "classical_polarization.rs", classical_polarization_example_runs);
example!(multipolarization, "multipolarization.rs", multipolarization_example_runs);
example!(combination, "combination_expansion.rs", combination_expansion_example_runs);
example!(basis, "basis_embedding.rs", basis_embedding_example_runs);
example!(psi_image, "psi_image.rs", psi_image_example_runs);
example!(serialization, "serialization.rs", serialization_example_runs);
example!(sign_kernels, "sign_kernels.rs", sign_kernels_example_runs);
example!(verify_suite, "verify_suite.rs", verify_suite_example_runs);
