#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "graphcent/catalog.hpp"
#include "graphcent/spectral.hpp"
#include "oracles.hpp"

namespace gc = graphcent;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

template <class Fn>
bool throws_code(Fn&& fn, gc::errc want) {
    try {
        (void)fn();
    } catch (const gc::graph_error& e) {
        return e.code() == want;
    } catch (...) {
        return false;
    }
    return false;
}

double entropy_of(gc::CatalogId id) {
    return gc::von_neumann_entropy(gc::density_matrix(gc::catalog_graph(id)));
}

} // namespace

TEST_CASE("density matrix is a unit-trace PSD rescaling of the laplacian") {
    const gc::Graph g = gc::catalog_graph(gc::CatalogId::wheel);
    const Eigen::MatrixXd rho = gc::density_matrix(g);
    CHECK(near(rho.trace(), 1.0, 1e-15));
    CHECK(near((rho - rho.transpose()).norm(), 0.0, 0.0));
    // L / (2m): the hub row carries degree 6 over 2m = 24.
    CHECK(rho(6, 6) == 6.0 / 24.0);

    CHECK(throws_code([] { return gc::density_matrix(gc::build_graph(3, {})); },
                      gc::errc::empty_graph));
}

TEST_CASE("symmetric eigensolver on known spectra") {
    SUBCASE("single edge") {
        const Eigen::MatrixXd lap = gc::laplacian(gc::build_graph(2, {{0, 1}}));
        const gc::Spectrum s = gc::eigenvalues_sym(lap);
        REQUIRE(s.eigenvalues.size() == 2);
        CHECK(near(s.eigenvalues[0], 0.0, 1e-12));
        CHECK(near(s.eigenvalues[1], 2.0, 1e-12));
    }
    SUBCASE("complete graph: 0 plus n with multiplicity n-1") {
        const Eigen::MatrixXd lap = gc::laplacian(gc::catalog_graph(gc::CatalogId::complete));
        const gc::Spectrum s = gc::eigenvalues_sym(lap, gc::PsdPolicy::expect_psd);
        REQUIRE(s.eigenvalues.size() == 7);
        CHECK(near(s.eigenvalues[0], 0.0, 1e-12));
        for (int i = 1; i < 7; ++i) {
            CHECK(near(s.eigenvalues[i], 7.0, 1e-12));
        }
    }
    SUBCASE("circle: 2 - 2 cos(2 pi k / 7)") {
        const Eigen::MatrixXd lap = gc::laplacian(gc::catalog_graph(gc::CatalogId::circle));
        const gc::Spectrum s = gc::eigenvalues_sym(lap, gc::PsdPolicy::expect_psd);
        std::vector<double> expected;
        for (int k = 0; k < 7; ++k) {
            expected.push_back(2.0 - 2.0 * std::cos(2.0 * kPi * k / 7.0));
        }
        std::sort(expected.begin(), expected.end());
        REQUIRE(s.eigenvalues.size() == 7);
        for (int i = 0; i < 7; ++i) {
            CHECK(near(s.eigenvalues[i], expected[i], 1e-12));
        }
    }
    SUBCASE("ascending order on every catalog laplacian") {
        for (const gc::CatalogId id : gc::catalog_ids()) {
            const gc::Spectrum s =
                gc::eigenvalues_sym(gc::laplacian(gc::catalog_graph(id)), gc::PsdPolicy::expect_psd);
            for (size_t i = 1; i < s.eigenvalues.size(); ++i) {
                CHECK(s.eigenvalues[i - 1] <= s.eigenvalues[i]);
            }
        }
    }
}

TEST_CASE("eigenvalues reproduce the characteristic polynomial") {
    // Independent cross-check: Faddeev-LeVerrier coefficients of det(xI - L)
    // against the polynomial rebuilt from the computed roots. Coefficients
    // of integer matrices are integers; tolerance scales with their size.
    for (const gc::CatalogId id : gc::catalog_ids()) {
        CAPTURE(gc::to_string(id));
        const Eigen::MatrixXd lap = gc::laplacian(gc::catalog_graph(id));
        const std::vector<double> want = oracles::char_poly_coeffs(lap);
        const gc::Spectrum s = gc::eigenvalues_sym(lap, gc::PsdPolicy::expect_psd);
        const std::vector<double> got = oracles::poly_from_roots(s.eigenvalues);
        REQUIRE(got.size() == want.size());
        double scale = 1.0;
        for (const double c : want) scale = std::max(scale, std::fabs(c));
        for (size_t i = 0; i < want.size(); ++i) {
            CHECK(near(got[i], want[i], 1e-9 * scale));
        }
    }
}

TEST_CASE("symmetry and psd policies") {
    SUBCASE("asymmetric input is rejected") {
        Eigen::MatrixXd m(2, 2);
        m << 0.0, 1.0, 2.0, 0.0;
        CHECK(throws_code([&] { return gc::eigenvalues_sym(m); }, gc::errc::not_symmetric));
    }
    SUBCASE("tiny negatives are clamped and counted") {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        m(0, 0) = -1e-12;
        m(1, 1) = 1.0;
        const gc::Spectrum s = gc::eigenvalues_sym(m, gc::PsdPolicy::expect_psd);
        CHECK(s.clamped_count == 1);
        CHECK(s.eigenvalues[0] == 0.0);
    }
    SUBCASE("genuinely negative spectra are a hard error") {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        m(0, 0) = -1.0;
        m(1, 1) = 1.0;
        CHECK(throws_code([&] { return gc::eigenvalues_sym(m, gc::PsdPolicy::expect_psd); },
                          gc::errc::not_psd));
        CHECK_NOTHROW(gc::eigenvalues_sym(m, gc::PsdPolicy::none));
    }
}

TEST_CASE("von neumann entropy of the catalog") {
    CHECK(near(entropy_of(gc::CatalogId::star), 1.34979239617, 1e-11));
    CHECK(near(entropy_of(gc::CatalogId::wheel), 1.69757448798, 1e-11));
    CHECK(near(entropy_of(gc::CatalogId::balanced_tree), 1.49760611056, 1e-11));
    CHECK(near(entropy_of(gc::CatalogId::lollipop), 1.57913614412, 1e-11));
    CHECK(near(entropy_of(gc::CatalogId::barbell), 1.62013370957, 1e-11));
    CHECK(near(entropy_of(gc::CatalogId::bipartite_3_4), 1.73641897492, 1e-11));
    CHECK(near(entropy_of(gc::CatalogId::two_story_house), 1.66883492865, 1e-11));
    CHECK(near(entropy_of(gc::CatalogId::path), 1.54826236496, 1e-11));
    CHECK(near(entropy_of(gc::CatalogId::circle), 1.63192235959, 1e-11));
    // K7 attains the ln(n-1) ceiling.
    CHECK(near(entropy_of(gc::CatalogId::complete), std::log(6.0), 1e-12));

    for (const gc::CatalogId id : gc::catalog_ids()) {
        const double h = entropy_of(id);
        CHECK(h >= 0.0);
        CHECK(h <= std::log(6.0) + 1e-12);
    }
}

TEST_CASE("renyi entropy") {
    const gc::Graph g = gc::catalog_graph(gc::CatalogId::two_story_house);
    const Eigen::MatrixXd rho = gc::density_matrix(g);

    SUBCASE("orders at or below zero and order one are rejected") {
        CHECK(throws_code([&] { return gc::renyi_entropy(rho, 1.0); }, gc::errc::invalid_order));
        CHECK(throws_code([&] { return gc::renyi_entropy(rho, 0.0); }, gc::errc::invalid_order));
        CHECK(throws_code([&] { return gc::renyi_entropy(rho, -2.0); }, gc::errc::invalid_order));
    }
    SUBCASE("nonincreasing in the order") {
        const double h_half = gc::renyi_entropy(rho, 0.5);
        const double h1 = gc::von_neumann_entropy(rho);
        const double h2 = gc::renyi_entropy(rho, 2.0);
        const double h4 = gc::renyi_entropy(rho, 4.0);
        CHECK(h_half >= h1);
        CHECK(h1 >= h2);
        CHECK(h2 >= h4);
    }
    SUBCASE("p -> 1 recovers the von neumann entropy") {
        const double h1 = gc::von_neumann_entropy(rho);
        CHECK(near(gc::renyi_entropy(rho, 1.0 + 1e-7), h1, 1e-5));
        CHECK(near(gc::renyi_entropy(rho, 1.0 - 1e-7), h1, 1e-5));
    }
    SUBCASE("degree closed form matches the eigenvalue route at p = 2") {
        for (const gc::CatalogId id : gc::catalog_ids()) {
            const gc::Graph cg = gc::catalog_graph(id);
            CAPTURE(gc::to_string(id));
            CHECK(near(gc::renyi_entropy(gc::density_matrix(cg), 2.0),
                       gc::renyi2_entropy_degree_form(gc::degrees(cg)), 1e-12));
        }
    }
}
