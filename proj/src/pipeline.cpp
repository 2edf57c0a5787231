#include "arbor/pipeline.hpp"

#include "arbor/compiler.hpp"
#include "arbor/describe.hpp"
#include "arbor/error.hpp"
#include "arbor/ir_json.hpp"
#include "json.hpp"

namespace arbor {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_request(const std::string& msg) { throw Error(ErrorCode::BadRequest, msg); }

}  // namespace

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::tabular: return "tabular";
    case OutputFormat::navigable: return "navigable";
    case OutputFormat::tactile: return "tactile";
    case OutputFormat::ir: return "ir";
    case OutputFormat::description: return "description";
  }
  return "ir";
}

std::optional<OutputFormat> parse_format(std::string_view text) {
  for (auto f : {OutputFormat::tabular, OutputFormat::navigable, OutputFormat::tactile,
                 OutputFormat::ir, OutputFormat::description}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

OutputBundle compile_request(const CompileRequest& request) {
  if (request.formats.empty()) bad_request("at least one output format is required");
  if (request.source.size() > kMaxSourceBytes) {
    throw Error(ErrorCode::SourceTooLarge,
                "source exceeds " + std::to_string(kMaxSourceBytes) + " bytes");
  }
  const SourceSpec spec{request.source, request.language, request.structure, request.meta};
  const Ir ir = compile_source(spec);

  OutputBundle bundle;
  bundle.ir_json = to_json(ir);
  bundle.description = describe(ir);
  if (request.formats.contains(OutputFormat::tabular)) bundle.tabular = emit_table(ir);
  if (request.formats.contains(OutputFormat::navigable)) bundle.navigable = emit_navigable(ir);
  if (request.formats.contains(OutputFormat::tactile)) {
    bundle.tactile = emit_tactile(ir, request.tactile_config.value_or(TactileConfig{}));
  }
  return bundle;
}

std::string bundle_to_json(const OutputBundle& bundle) {
  Json j;
  j["ir_json"] = bundle.ir_json;
  j["description"] = bundle.description;
  if (bundle.tabular) {
    j["tabular"] = {{"html", bundle.tabular->html},
                    {"csv", bundle.tabular->csv},
                    {"column_names", bundle.tabular->column_names}};
  }
  if (bundle.navigable) {
    j["navigable"] = {{"html", bundle.navigable->html}, {"nav_model", bundle.navigable->nav_model}};
  }
  if (bundle.tactile) {
    Json legend = Json::array();
    for (const auto& e : bundle.tactile->legend) {
      legend.push_back({{"braille", e.braille}, {"print", e.print}});
    }
    j["tactile"] = {{"svg", bundle.tactile->svg},
                    {"page", {{"width_mm", bundle.tactile->width_mm},
                              {"height_mm", bundle.tactile->height_mm}}},
                    {"legend", std::move(legend)}};
  }
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

CompileRequest request_from_json(std::string_view body) {
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    bad_request(std::string("request is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad_request("request must be a JSON object");

  auto text_field = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_string()) bad_request(std::string("'") + key + "' must be a string");
    return j[key].get<std::string>();
  };

  CompileRequest req;
  const auto source = text_field("source");
  if (!source) bad_request("'source' is required");
  req.source = *source;

  const auto lang = text_field("language");
  if (!lang) bad_request("'language' is required");
  const auto parsed_lang = parse_language(*lang);
  if (!parsed_lang) bad_request("unknown language '" + *lang + "'");
  req.language = *parsed_lang;

  const auto structure = text_field("structure");
  if (!structure) bad_request("'structure' is required");
  const auto parsed_structure = parse_structure(*structure);
  if (!parsed_structure) bad_request("unknown structure '" + *structure + "'");
  req.structure = *parsed_structure;

  if (!j.contains("format")) bad_request("'format' is required");
  const Json& formats = j["format"];
  auto add_format = [&](const Json& f) {
    if (!f.is_string()) bad_request("'format' entries must be strings");
    const auto name = f.get<std::string>();
    if (name == "all") {
      req.formats.insert({OutputFormat::tabular, OutputFormat::navigable, OutputFormat::tactile,
                          OutputFormat::ir, OutputFormat::description});
      return;
    }
    const auto parsed = parse_format(name);
    if (!parsed) bad_request("unknown format '" + name + "'");
    req.formats.insert(*parsed);
  };
  if (formats.is_array()) {
    for (const auto& f : formats) add_format(f);
  } else {
    add_format(formats);
  }
  if (req.formats.empty()) bad_request("'format' must name at least one output");

  req.meta.title = text_field("title");
  req.meta.description = text_field("description");

  if (j.contains("tactile_config") && !j["tactile_config"].is_null()) {
    try {
      req.tactile_config = tactile_config_from_json(j["tactile_config"].dump());
    } catch (const Error& e) {
      bad_request(e.what());
    }
  }
  return req;
}

}  // namespace arbor
