#include "sp4/weyl.hpp"

namespace sp4 {

int weyl_length(Weyl w) {
  switch (w) {
    case Weyl::id: return 0;
    case Weyl::a:
    case Weyl::b: return 1;
    case Weyl::ab:
    case Weyl::ba: return 2;
    case Weyl::aba:
    case Weyl::bab: return 3;
    case Weyl::abab: return 4;
  }
  return 0;
}

std::string weyl_name(Weyl w) {
  switch (w) {
    case Weyl::id: return "1";
    case Weyl::a: return "a";
    case Weyl::b: return "b";
    case Weyl::ab: return "ab";
    case Weyl::ba: return "ba";
    case Weyl::aba: return "aba";
    case Weyl::bab: return "bab";
    case Weyl::abab: return "abab";
  }
  return "?";
}

std::string weyl_display(Weyl w) {
  switch (w) {
    case Weyl::id: return "id";
    case Weyl::a: return "s_alpha";
    case Weyl::b: return "s_beta";
    case Weyl::ab: return "s_alpha*s_beta";
    case Weyl::ba: return "s_beta*s_alpha";
    case Weyl::aba: return "s_alpha*s_beta*s_alpha";
    case Weyl::bab: return "s_beta*s_alpha*s_beta";
    case Weyl::abab: return "s_alpha*s_beta*s_alpha*s_beta";
  }
  return "?";
}

std::optional<Weyl> weyl_from_name(const std::string& s) {
  for (Weyl w : all_weyl)
    if (s == weyl_name(w) || s == weyl_display(w)) return w;
  if (s == "long" || s == "w0") return Weyl::abab;
  return std::nullopt;
}

namespace {

Mat4z gen_a() {
  Mat4z m;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

Mat4z gen_b() {
  Mat4z m;
  m(0, 0) = 1;
  m(1, 3) = 1;
  m(2, 2) = 1;
  m(3, 1) = -1;
  return m;
}

} // namespace

Mat4z weyl_matrix(Weyl w) {
  switch (w) {
    case Weyl::id: return Mat4z::identity();
    case Weyl::a: return gen_a();
    case Weyl::b: return gen_b();
    case Weyl::ab: return gen_a() * gen_b();
    case Weyl::ba: return gen_b() * gen_a();
    case Weyl::aba: return gen_a() * gen_b() * gen_a();
    case Weyl::bab: return gen_b() * gen_a() * gen_b();
    case Weyl::abab: return gen_a() * gen_b() * gen_a() * gen_b();
  }
  return Mat4z::identity();
}

int weyl_unfolded_dims(Weyl w) { return weyl_length(w); }

unsigned weyl_direction_mask(Weyl w) {
  // bits: 0 -> n1, 1 -> n2, 2 -> n4, 3 -> n5
  switch (w) {
    case Weyl::id: return 0u;
    case Weyl::a: return 0b0001u;
    case Weyl::b: return 0b1000u;
    case Weyl::ab: return 0b1100u;
    case Weyl::ba: return 0b0011u;
    case Weyl::aba: return 0b0111u;
    case Weyl::bab: return 0b1110u;
    case Weyl::abab: return 0b1111u;
  }
  return 0u;
}

} // namespace sp4
