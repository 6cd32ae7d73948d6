#include "doctest.h"
#include "polyrecip/complex.hpp"
#include "polyrecip/fixtures.hpp"

using namespace polyrecip;

namespace {

bool has_issue(const ValidationReport& r, ErrorCode code) {
  for (const auto& i : r.issues) {
    if (i.code == code) return true;
  }
  return false;
}

ErrorCode parse_error(const std::string& doc) {
  try {
    parse_complex(doc);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("document was accepted");
  return ErrorCode::MalformedDocument;
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("tetra fixture counts") {
    const CellComplex t = fixtures::tetra();
    CHECK(t.counts() == Counts{5, 10, 10, 5});
    CHECK(t.primal_counts() == Counts{5, 4, 6, 4});
    CHECK(t.exterior_cell() == 4);
    CHECK(t.stress_cell() == 4);
    CHECK(t.primal_edges().size() == 4);
  }

  TEST_CASE("primal edges are the spokes in the classic order") {
    const CellComplex t = fixtures::tetra();
    const std::vector<std::pair<int, int>> expected{{0, 3}, {0, 1}, {0, 2}, {0, 4}};
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const Edge& e = t.edges()[t.primal_edges()[k]];
      CHECK(e.tail == expected[k].first);
      CHECK(e.head == expected[k].second);
    }
  }

  TEST_CASE("edges run from the smaller vertex and normals are canonical") {
    for (const auto& name : fixtures::names()) {
      const CellComplex cx = fixtures::named(name);
      for (const Edge& e : cx.edges()) CHECK(e.tail < e.head);
      for (const Face& f : cx.faces()) {
        CHECK(f.normal.norm() == doctest::Approx(1.0));
        int k = 0;
        while (std::abs(f.normal[k]) <= 1e-12) ++k;
        CHECK(f.normal[k] > 0);
      }
    }
  }

  TEST_CASE("edge-face signs follow the right-hand rule") {
    const CellComplex t = fixtures::tetra();
    for (int f = 0; f < static_cast<int>(t.faces().size()); ++f) {
      const auto& loop = t.faces()[f].loop;
      for (std::size_t k = 0; k < loop.size(); ++k) {
        const int a = loop[k];
        const int b = loop[(k + 1) % loop.size()];
        const int e = t.find_edge(a, b);
        // stepping a -> b along the loop, then turning towards the face centre
        const Eigen::Vector3d step = t.vertices()[b] - t.vertices()[a];
        const Eigen::Vector3d inward = t.face_centroid(f) - t.vertices()[a];
        const int loop_dir = step.cross(inward).dot(t.faces()[f].normal) > 0 ? 1 : -1;
        const int edge_dir = a < b ? 1 : -1;
        CHECK(t.edge_face_sign(e, f) == loop_dir * edge_dir);
      }
    }
  }

  TEST_CASE("every face of a valid complex bounds two cells") {
    for (const auto& name : fixtures::names()) {
      const CellComplex cx = fixtures::named(name);
      for (int f = 0; f < static_cast<int>(cx.faces().size()); ++f) CHECK(cx.face_cells(f).size() == 2);
      CHECK(validate(cx, kPlanarityTolerance).ok());
    }
  }

  TEST_CASE("serialize and parse round trip") {
    for (const auto& name : fixtures::names()) {
      const CellComplex a = fixtures::named(name);
      const CellComplex b = parse_complex(serialize(a));
      CHECK(b.face_loops() == a.face_loops());
      CHECK(b.cell_face_lists() == a.cell_face_lists());
      CHECK(b.stress_cell() == a.stress_cell());
      CHECK(b.role() == a.role());
      CHECK(b.stress_direction() == a.stress_direction());
      for (std::size_t v = 0; v < a.vertices().size(); ++v) CHECK(b.vertices()[v] == a.vertices()[v]);
    }
  }

  TEST_CASE("malformed documents") {
    CHECK(parse_error("not json") == ErrorCode::MalformedDocument);
    CHECK(parse_error("[]") == ErrorCode::MalformedDocument);
    CHECK(parse_error(R"({"role":"form","direction":"inward","stress_cell":0,"vertices":[],"faces":[],"cells":[]})") ==
          ErrorCode::MalformedDocument);
    CHECK(parse_error(R"({"role":"shape","direction":"inward","stress_cell":0,
      "vertices":[[0,0,0],[1,0,0],[0,1,0]],"faces":[[0,1,2]],"cells":[[0],[0]]})") == ErrorCode::MalformedDocument);
    CHECK(parse_error(R"({"role":"form","direction":"inward","stress_cell":0,
      "vertices":[[0,0,0],[1,0,0],[0,1,0]],"faces":[[0,1,7]],"cells":[[0],[0]]})") == ErrorCode::MalformedDocument);
    CHECK(parse_error(R"({"role":"form","direction":"inward","stress_cell":5,
      "vertices":[[0,0,0],[1,0,0],[0,1,0]],"faces":[[0,1,2]],"cells":[[0],[0]]})") == ErrorCode::MalformedDocument);
  }

  TEST_CASE("a perturbed vertex breaks planarity") {
    const CellComplex g = fixtures::glued_boxes();
    const CellComplex bent = g.with_vertex(0, g.vertices()[0] + Point3(0.0, 0.0, 0.05));
    const ValidationReport r = validate(bent, kPlanarityTolerance);
    CHECK_FALSE(r.planarity);
    CHECK(has_issue(r, ErrorCode::NonPlanarFace));
    CHECK(parse_error(serialize(bent)) == ErrorCode::NonPlanarFace);
  }

  TEST_CASE("a cell missing a face is open") {
    const CellComplex t = fixtures::tetra();
    auto cells = t.cell_face_lists();
    cells[0].pop_back();
    const CellComplex open =
        CellComplex::build(t.vertices(), t.face_loops(), cells, t.role(), t.stress_cell(), t.stress_direction());
    const ValidationReport r = validate(open, kPlanarityTolerance);
    CHECK_FALSE(r.cell_closure);
    CHECK(r.issues.front().code == ErrorCode::OpenCell);
    CHECK(r.issues.front().index == 0);
    CHECK(parse_error(serialize(open)) == ErrorCode::OpenCell);
  }

  TEST_CASE("dropping a whole cell leaves dangling faces") {
    const CellComplex t = fixtures::tetra();
    auto cells = t.cell_face_lists();
    cells.erase(cells.begin());
    const CellComplex cut =
        CellComplex::build(t.vertices(), t.face_loops(), cells, t.role(), 3, t.stress_direction());
    const ValidationReport r = validate(cut, kPlanarityTolerance);
    CHECK_FALSE(r.two_cells_per_face);
    CHECK(has_issue(r, ErrorCode::DanglingFace));
  }

  TEST_CASE("cell volumes and the exterior") {
    const CellComplex g = fixtures::glued_boxes();
    CHECK(std::abs(g.cell_signed_volume(0)) == doctest::Approx(1.0));
    CHECK(std::abs(g.cell_signed_volume(1)) == doctest::Approx(1.0));
    CHECK(std::abs(g.cell_signed_volume(2)) == doctest::Approx(2.0));
    CHECK(g.exterior_cell() == 2);
  }

  TEST_CASE("face areas") {
    const CellComplex g = fixtures::glued_boxes();
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) CHECK(g.face_area(f) == doctest::Approx(1.0));
  }

  TEST_CASE("flipping a normal reverses the induced loop orientation") {
    const CellComplex t = fixtures::tetra();
    const CellComplex flipped = t.with_flipped_normal(2);
    CHECK(flipped.faces()[2].normal.isApprox(-t.faces()[2].normal));
    CHECK(flipped.loop_sign(2) == -t.loop_sign(2));
  }
}
