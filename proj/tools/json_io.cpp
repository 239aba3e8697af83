#include "json_io.hpp"

#include "expr.hpp"

namespace pommiez::cli {

namespace {

Json variety_to_json(const MultiplicityVariety& w) {
  Json arr = Json::array();
  for (const auto& [point, order] : w.entries()) {
    Json e;
    e["point"] = to_string(point);
    e["order"] = order;
    arr.push_back(e);
  }
  return arr;
}

MultiplicityVariety variety_from_json(const Json& j) {
  std::vector<std::pair<GaussianRational, int>> entries;
  for (const auto& e : j) {
    entries.emplace_back(parse_scalar(e.at("point").get<std::string>()),
                         e.at("order").get<int>());
  }
  return MultiplicityVariety(std::move(entries));
}

}  // namespace

Json descriptor_to_json(const SubspaceDescriptor& d) {
  Json j;
  switch (d.kind()) {
    case SubspaceDescriptor::Kind::Full:
      j["type"] = "full";
      break;
    case SubspaceDescriptor::Kind::Trivial:
      j["type"] = "trivial";
      break;
    case SubspaceDescriptor::Kind::ZeroVariety:
      j["type"] = "zero_variety";
      j["w"] = variety_to_json(d.w());
      break;
    case SubspaceDescriptor::Kind::Rational:
      j["type"] = "rational";
      j["p"] = print_polynomial_factored(d.p());
      if (d.n())
        j["n"] = *d.n();
      else
        j["n"] = "-inf";
      j["upsilon"] = variety_to_json(d.upsilon());
      break;
  }
  return j;
}

SubspaceDescriptor descriptor_from_json(const ContextPtr& ctx, const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  SubspaceDescriptor d = SubspaceDescriptor::trivial();
  if (type == "full") {
    d = SubspaceDescriptor::full();
  } else if (type == "trivial") {
    d = SubspaceDescriptor::trivial();
  } else if (type == "zero_variety") {
    d = SubspaceDescriptor::zero_variety(variety_from_json(j.at("w")));
  } else if (type == "rational") {
    RationalFunction pr = parse_rational_expr(j.at("p").get<std::string>(), 'z');
    if (!pr.is_polynomial()) throw DomainError("descriptor: p must be a polynomial");
    ExtendedDegree n;
    const Json& nj = j.at("n");
    if (nj.is_string()) {
      if (nj.get<std::string>() != "-inf")
        throw DomainError("descriptor: n must be an integer or \"-inf\"");
    } else {
      n = nj.get<int>();
    }
    MultiplicityVariety upsilon;
    if (j.contains("upsilon")) upsilon = variety_from_json(j.at("upsilon"));
    d = SubspaceDescriptor::rational(pr.num(), n, std::move(upsilon));
  } else {
    throw DomainError("descriptor: unknown type '" + type + "'");
  }
  validate_descriptor(ctx, d);
  return d;
}

SubspaceDescriptor descriptor_from_string(const ContextPtr& ctx, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("descriptor: invalid JSON: ") + e.what());
  }
  return descriptor_from_json(ctx, j);
}

}  // namespace pommiez::cli
