#pragma once

#include <json.hpp>

#include "pommiez/classify.hpp"

namespace pommiez::cli {

using Json = nlohmann::ordered_json;

/// Descriptor wire format (all exact values as strings, n as a JSON number
/// or the string "-inf"):
///   {"type":"rational","p":"(1-z)","n":1,"upsilon":[{"point":"3","order":1}]}
///   {"type":"zero_variety","w":[{"point":"1","order":1}]}
///   {"type":"full"}   {"type":"trivial"}
Json descriptor_to_json(const SubspaceDescriptor& d);
SubspaceDescriptor descriptor_from_json(const ContextPtr& ctx, const Json& j);
SubspaceDescriptor descriptor_from_string(const ContextPtr& ctx, const std::string& text);

}  // namespace pommiez::cli
