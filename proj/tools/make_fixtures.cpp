// Writes the bundled fixture documents. With --check, compares instead of writing.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lietriple/cohomology.hpp"
#include "lietriple/families.hpp"
#include "lietriple/serialize.hpp"

using namespace lietriple;
namespace fs = std::filesystem;

namespace {

std::vector<std::pair<std::string, io::Document>> fixtures() {
  std::vector<std::pair<std::string, io::Document>> out;
  auto add = [&](std::string name, io::Payload p) { out.emplace_back(std::move(name), io::Document{std::move(p)}); };

  const LYAlgebra abelian2(2), abelian3(3);
  const LYAlgebra a2 = lie_to_lya(affine2());
  const LYAlgebra so3_ly = lie_to_lya(so3());
  const LYAlgebra omni1 = omni_lie(1);
  const ReductiveDecomposition so3red = so3_reductive();

  add("abelian2", abelian2);
  add("abelian3", abelian3);
  add("a2", a2);
  add("a2_lie", io::LieDocument{affine2(), std::nullopt});
  {
    Tensor b = a2.binary();
    b(0, 1, 0) = 2;
    add("a2_broken", LYAlgebra::unchecked(std::move(b), a2.ternary()));
  }
  add("so3", so3_ly);
  add("so3_lie", io::LieDocument{so3(), std::nullopt});
  add("omni1", omni1);
  add("leib2", leib2());
  add("so3red", io::LieDocument{so3red.lie, std::pair{so3red.h, so3red.m}});
  add("so3red_lya", reductive_to_lya(so3red));

  add("abelian2_zero_rep", io::RepDocument{zero_rep(2, 1), std::nullopt});
  add("a2_adjoint", io::RepDocument{adjoint_rep(a2), std::nullopt});
  add("so3_adjoint", io::RepDocument{adjoint_rep(so3_ly), std::nullopt});
  add("omni1_adjoint", io::RepDocument{adjoint_rep(omni1), std::nullopt});
  add("a2_adjoint_action", io::RepDocument{adjoint_rep(a2), LYAlgebra(2)});
  add("a2_adjoint_self_action", io::RepDocument{adjoint_rep(a2), a2});

  // A cocycle on A2 with its adjoint module that is not a coboundary, and a broken copy.
  const Representation ad = adjoint_rep(a2);
  CohomologyResult h = h3445_dims(a2, ad);
  CochainQuadruple cocycle;
  for (const auto& z : h.cocycle_basis.basis)
    if (!contains(h.coboundary_basis, z)) {
      cocycle = CochainQuadruple::from_vector(2, 2, z);
      break;
    }
  add("a2_cocycle", cocycle);
  CochainQuadruple broken = cocycle;
  broken.l3.coeffs()[0] += 1;
  add("a2_noncocycle", broken);

  TwoTermAlgebra skel = skeletal_from_data(a2, ad, cocycle);
  add("a2_skeletal", skel);
  CochainQuadruple scaled = cocycle;
  for (Cochain* c : {&scaled.l3, &scaled.l4hat, &scaled.l4tilde, &scaled.l5})
    for (auto& x : c->coeffs()) x *= 2;
  TwoTermAlgebra skel2 = skeletal_from_data(a2, ad, scaled);
  TwoTermHomomorphism scale = identity_homomorphism(skel);
  scale.phi1 = Rational(2) * scale.phi1;
  add("a2_scaling_hom", io::HomomorphismDocument{skel, skel2, scale});

  add("a2_crossed", identity_crossed(a2));
  add("a2_strict", strict_from_crossed(identity_crossed(a2)));
  add("leib2_crossed", identity_leibniz_crossed(leib2()));
  add("so3red_crossed", identity_reductive_crossed(so3red));

  CrossedExtension split = split_extension(a2, ad);
  add("extension_split", split);
  CrossedExtension heis = heisenberg_extension();
  add("extension_heisenberg", heis);
  CrossedExtension alt = heis;
  Matrix hmap(heis.c.v.dim(), heis.t.dim());
  hmap(0, 1) = 1;
  hmap(2, 0) = Rational(-1, 2);
  alt.s = alt.s + alt.c.boundary * hmap;
  Matrix g(heis.m_dim(), heis.c.t.dim());
  g(0, 0) = 3;
  alt.q = alt.q + alt.i * g;
  add("extension_heisenberg_alt", alt);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool check = argc == 3 && std::string(argv[1]) == "--check";
  if (!(argc == 2 || check)) {
    std::cerr << "usage: make_fixtures [--check] DIR\n";
    return 2;
  }
  fs::path dir = argv[argc - 1];
  int stale = 0;
  for (const auto& [name, doc] : fixtures()) {
    fs::path p = dir / (name + ".json");
    std::string text = io::render(doc);
    if (check) {
      std::ifstream in(p, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      if (!in || ss.str() != text) {
        std::cerr << "stale fixture: " << p.string() << "\n";
        ++stale;
      }
    } else {
      fs::create_directories(dir);
      std::ofstream(p, std::ios::binary) << text;
    }
  }
  return stale == 0 ? 0 : 1;
}
