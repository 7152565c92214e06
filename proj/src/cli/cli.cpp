#include "vrmenu/cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vrmenu/core/validate.hpp"
#include "vrmenu/editor/editor.hpp"
#include "vrmenu/error.hpp"
#include "vrmenu/io/document_format.hpp"
#include "vrmenu/io/report_format.hpp"
#include "vrmenu/io/scene_export.hpp"
#include "vrmenu/layout/layout.hpp"
#include "vrmenu/service/server.hpp"
#include "vrmenu/usability/usability.hpp"

namespace vrmenu::cli {

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoFailure("cannot read " + path);
  }
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) {
    throw IoFailure("cannot write " + path);
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::kSyntax:
    return kExitSyntax;
  case ErrorCode::kUnknownId:
    return kExitUnknownId;
  default:
    return kExitConstraint;
  }
}

// "TYPE:NAME:REF[:TEXT[:ICON]]" where REF is the function id or submenu id.
editor::ButtonSpec parse_button_flag(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) {
    parts.push_back(part);
  }
  if (parts.size() < 3 || parts.size() > 5) {
    throw Error(ErrorCode::kInvalidArgument, "button spec expects TYPE:NAME:REF[:TEXT[:ICON]], got '" + text + "'");
  }
  const auto type = core::parse_button_type(parts[0]);
  if (!type) {
    throw Error(ErrorCode::kInvalidArgument, "unknown button type '" + parts[0] + "'");
  }
  editor::ButtonSpec spec;
  spec.button_type = *type;
  spec.name = parts[1];
  if (*type == core::ButtonType::kSubMenu) {
    spec.sub_menu_ref = parts[2];
  } else {
    spec.function_id = parts[2];
  }
  spec.text = parts.size() > 3 ? parts[3] : parts[1];
  if (parts.size() > 4 && !parts[4].empty()) {
    spec.icon_ref = parts[4];
  }
  return spec;
}

struct Options {
  std::string doc_path;
  std::string other_doc_path;
  std::string out_path;
  std::string style_path;
  std::string params;
  std::string viewer;
  std::string menu_id;
  std::vector<std::string> menu_ids;
  std::string button_id;
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  int port = 8080;
  std::string data_dir;
  bool in_place = false;
  std::vector<std::string> capacities;

  // creator
  std::string request_path;
  std::string name;
  std::string type;
  std::string title;
  bool not_root = false;
  std::string position;
  std::vector<std::string> buttons;

  // modify
  std::string text;
  std::string icon;
  std::string ref;
  std::string function_id;
  std::string button_spec;
};

class Runner {
 public:
  Runner(Options& opts, std::ostream& out, std::ostream& err) : o_(opts), out_(out), err_(err) {}

  core::MenuDocument load_doc(const std::string& path) const { return io::parse_document(read_file(path)); }

  layout::StyleParams style() const {
    return o_.style_path.empty() ? layout::StyleParams{} : io::parse_style(read_file(o_.style_path));
  }

  void emit(const std::string& text) const {
    if (o_.out_path.empty()) {
      out_ << text;
    } else {
      write_file(o_.out_path, text);
    }
  }

  void emit_document(const editor::EditOutcome& outcome) const {
    for (const auto& w : outcome.warnings) {
      err_ << "warning: " << w << "\n";
    }
    const std::string text = io::serialize_document(outcome.document);
    if (o_.in_place) {
      write_file(o_.doc_path, text);
    }
    if (!o_.in_place || !o_.out_path.empty()) {
      emit(text);
    }
  }

  usability::UsabilityReport report_for(const core::MenuDocument& doc, const std::string& menu_id) const {
    const core::MenuNode& menu = doc.menu(menu_id);
    const layout::LayoutResult placed = layout::layout(menu, style());
    const usability::FittsParams params = o_.params.empty() ? usability::FittsParams{} : io::parse_params(o_.params);
    const usability::ViewerConfig viewer =
        o_.viewer.empty() ? usability::default_viewer(placed) : io::parse_viewer(o_.viewer);
    return usability::menu_usability_report(menu, placed, viewer, params);
  }

  void cmd_new() const { emit(io::serialize_document(core::MenuDocument{})); }

  void cmd_creator() const {
    const core::MenuDocument doc = load_doc(o_.doc_path);
    editor::CreateMenuRequest req;
    if (!o_.request_path.empty()) {
      req = io::parse_create_request(read_file(o_.request_path));
    } else {
      if (o_.type.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "creator needs --request or --type");
      }
      const auto type = core::parse_menu_type(o_.type);
      if (!type) {
        throw Error(ErrorCode::kInvalidArgument, "unknown menu type '" + o_.type + "'");
      }
      req.menu_type = *type;
      req.menu_name = o_.name;
      req.menu_title = o_.title;
      req.is_root_menu = !o_.not_root;
      if (!o_.position.empty()) {
        req.position_mode = core::parse_position_mode(o_.position);
        if (!req.position_mode) {
          throw Error(ErrorCode::kInvalidArgument, "unknown position mode '" + o_.position + "'");
        }
      }
      for (const auto& b : o_.buttons) {
        req.button_specs.push_back(parse_button_flag(b));
      }
    }
    const auto outcome = editor::create_menu(doc, req);
    err_ << "created:";
    for (const auto& id : outcome.created_ids) {
      err_ << " " << id;
    }
    err_ << "\n";
    emit_document(outcome);
  }

  void cmd_modify(const std::string& action) const {
    const core::MenuDocument doc = load_doc(o_.doc_path);
    editor::EditOutcome outcome;
    if (action == "set-title") {
      outcome = editor::set_menu_title(doc, o_.menu_id, o_.title);
    } else if (action == "add-button") {
      outcome = editor::add_button(doc, o_.menu_id, parse_button_flag(o_.button_spec));
      err_ << "created: " << outcome.created_ids.front() << "\n";
    } else if (action == "set-button-type") {
      const auto type = core::parse_button_type(o_.type);
      if (!type) {
        throw Error(ErrorCode::kInvalidArgument, "unknown button type '" + o_.type + "'");
      }
      editor::ButtonTypeChange change{*type, std::nullopt, std::nullopt};
      if (*type == core::ButtonType::kSubMenu) {
        change.sub_menu_ref = o_.ref;
      } else {
        change.function_id = o_.function_id;
      }
      outcome = editor::set_button_type(doc, o_.button_id, change);
    } else if (action == "set-text") {
      outcome = editor::set_button_text(doc, o_.button_id, o_.text);
    } else if (action == "set-icon") {
      outcome = editor::set_button_icon(doc, o_.button_id,
                                        o_.icon.empty() ? std::nullopt : std::optional<std::string>(o_.icon));
    } else if (action == "remove-button") {
      outcome = editor::remove_button(doc, o_.button_id);
    } else if (action == "toggle-active") {
      outcome = editor::toggle_menu_active(doc, o_.menu_id);
    }
    emit_document(outcome);
  }

  int cmd_validate() const {
    try {
      const core::MenuDocument doc = load_doc(o_.doc_path);
      emit(io::dump(io::Json{{"valid", true}, {"violations", io::Json::array()}}));
      return kExitOk;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kConstraint) {
        throw;
      }
      emit(io::dump(io::Json{{"valid", false}, {"violations", io::violations_json(e.violations())}}));
      return kExitConstraint;
    }
  }

  void cmd_layout() const {
    const core::MenuDocument doc = load_doc(o_.doc_path);
    emit(io::dump(io::to_json(layout::layout(doc.menu(o_.menu_id), style()))));
  }

  void cmd_export() const {
    const core::MenuDocument doc = load_doc(o_.doc_path);
    emit(io::dump(io::to_json(io::export_scene(doc, style()))));
  }

  void cmd_analyze() const {
    const core::MenuDocument doc = load_doc(o_.doc_path);
    emit(io::dump(io::to_json(report_for(doc, o_.menu_id))));
  }

  void cmd_compare() const {
    if (o_.menu_ids.size() != 2) {
      throw Error(ErrorCode::kInvalidArgument, "compare needs exactly two --menu ids");
    }
    const core::MenuDocument left_doc = load_doc(o_.doc_path);
    const core::MenuDocument right_doc = o_.other_doc_path.empty() ? left_doc : load_doc(o_.other_doc_path);
    emit(io::dump(io::compare_json(report_for(left_doc, o_.menu_ids[0]), report_for(right_doc, o_.menu_ids[1]))));
  }

  void cmd_simulate() const {
    const core::MenuDocument doc = load_doc(o_.doc_path);
    const core::MenuNode& menu = doc.menu(o_.menu_id);
    const layout::LayoutResult placed = layout::layout(menu, style());
    const usability::FittsParams params = o_.params.empty() ? usability::FittsParams{} : io::parse_params(o_.params);
    const usability::ViewerConfig viewer =
        o_.viewer.empty() ? usability::default_viewer(placed) : io::parse_viewer(o_.viewer);
    emit(io::dump(io::to_json(usability::simulate_selections(menu, placed, viewer, params, o_.trials, o_.seed))));
  }

  int cmd_serve() const {
    std::string dir = o_.data_dir;
    if (dir.empty()) {
      const char* env = std::getenv("DATA_DIR");
      dir = env != nullptr ? env : "data";
    }
    service::DocumentStore store(dir);
    service::Server server(store);
    const int port = server.bind("0.0.0.0", o_.port);
    if (port < 0) {
      err_ << "error: cannot bind port " << o_.port << "\n";
      return kExitUsage;
    }
    err_ << "serving " << dir << " on port " << port << "\n";
    return server.listen_after_bind() ? kExitOk : kExitUsage;
  }

 private:
  Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

void apply_capacities(const std::vector<std::string>& overrides) {
  core::CapacityTable table = core::capacity_table();
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    const auto type = core::parse_menu_type(item.substr(0, eq));
    std::size_t value = 0;
    try {
      value = eq == std::string::npos ? 0 : std::stoul(item.substr(eq + 1));
    } catch (const std::exception&) {
    }
    if (!type || value == 0) {
      throw Error(ErrorCode::kInvalidArgument, "--capacity expects TYPE=N, got '" + item + "'");
    }
    switch (*type) {
    case core::MenuType::kList:
      table.list = value;
      break;
    case core::MenuType::kMatrix:
      table.matrix = value;
      break;
    case core::MenuType::kPie:
      table.pie = value;
      break;
    case core::MenuType::kRing:
      table.ring = value;
      break;
    }
  }
  core::set_capacity_table(table);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Build, edit, lay out and score hierarchical VR menus", "vrmenu"};
  app.require_subcommand(1);
  app.add_option("--capacity", o.capacities, "Override a menu capacity, e.g. List=8");

  auto doc_opt = [&](CLI::App* sub) { sub->add_option("--doc", o.doc_path, "Document file")->required(); };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "Write output here instead of stdout"); };
  auto style_opt = [&](CLI::App* sub) { sub->add_option("--style", o.style_path, "StyleParams JSON file"); };
  auto scoring_opts = [&](CLI::App* sub) {
    sub->add_option("--params", o.params, "Fitts constants a,b");
    sub->add_option("--viewer", o.viewer, "Ray start pose x,y,z,dx,dy,dz");
    style_opt(sub);
  };

  auto* cmd_new = app.add_subcommand("new", "Create an empty document");
  out_opt(cmd_new);

  auto* creator = app.add_subcommand("creator", "Create a menu from a request file or flags");
  doc_opt(creator);
  out_opt(creator);
  creator->add_flag("--in-place", o.in_place, "Write the result back to --doc");
  creator->add_option("--request", o.request_path, "CreateMenuRequest JSON file");
  creator->add_option("--name", o.name, "Menu name");
  creator->add_option("--type", o.type, "List|Matrix|Pie|Ring");
  creator->add_option("--title", o.title, "Menu title");
  creator->add_flag("--not-root", o.not_root, "Create a detached submenu instead of a root menu");
  creator->add_option("--position", o.position, "Fixed|HandReferenced|HeadReferenced");
  creator->add_option("--spec", o.buttons, "Button as TYPE:NAME:REF[:TEXT[:ICON]] (repeatable)");

  auto* modify = app.add_subcommand("modify", "Edit one menu or button by id");
  modify->require_subcommand(1);
  std::string action;
  auto modify_action = [&](const char* name, const char* help) {
    auto* sub = modify->add_subcommand(name, help);
    doc_opt(sub);
    out_opt(sub);
    sub->add_flag("--in-place", o.in_place, "Write the result back to --doc");
    sub->callback([&action, name] { action = name; });
    return sub;
  };
  auto* set_title = modify_action("set-title", "Set a menu title");
  set_title->add_option("--menu", o.menu_id)->required();
  set_title->add_option("--title", o.title)->required();
  auto* add_button = modify_action("add-button", "Append a button to a menu");
  add_button->add_option("--menu", o.menu_id)->required();
  add_button->add_option("--spec", o.button_spec, "TYPE:NAME:REF[:TEXT[:ICON]]")->required();
  auto* set_type = modify_action("set-button-type", "Retype a button");
  set_type->add_option("--button", o.button_id)->required();
  set_type->add_option("--type", o.type, "SubMenu|Function")->required();
  set_type->add_option("--ref", o.ref, "Submenu id (SubMenu)");
  set_type->add_option("--function", o.function_id, "Function id (Function)");
  auto* set_text = modify_action("set-text", "Set button text");
  set_text->add_option("--button", o.button_id)->required();
  set_text->add_option("--text", o.text)->required();
  auto* set_icon = modify_action("set-icon", "Set or clear a button icon");
  set_icon->add_option("--button", o.button_id)->required();
  set_icon->add_option("--icon", o.icon, "Icon asset key; empty clears");
  auto* remove = modify_action("remove-button", "Remove a button (and its submenu tree)");
  remove->add_option("--button", o.button_id)->required();
  auto* toggle = modify_action("toggle-active", "Toggle a menu's active flag");
  toggle->add_option("--menu", o.menu_id)->required();

  auto* validate = app.add_subcommand("validate", "Check a document against every invariant");
  doc_opt(validate);
  out_opt(validate);

  auto* layout_cmd = app.add_subcommand("layout", "Print the layout of one menu");
  doc_opt(layout_cmd);
  out_opt(layout_cmd);
  style_opt(layout_cmd);
  layout_cmd->add_option("--menu", o.menu_id)->required();

  auto* export_cmd = app.add_subcommand("export", "Export every menu as scene nodes");
  doc_opt(export_cmd);
  out_opt(export_cmd);
  style_opt(export_cmd);

  auto* analyze = app.add_subcommand("analyze", "Usability report of one menu");
  doc_opt(analyze);
  out_opt(analyze);
  scoring_opts(analyze);
  analyze->add_option("--menu", o.menu_id)->required();

  auto* compare = app.add_subcommand("compare", "Two usability reports side by side");
  doc_opt(compare);
  out_opt(compare);
  scoring_opts(compare);
  compare->add_option("--menu", o.menu_ids, "Two menu ids")->required()->expected(1, 2);
  compare->add_option("--other-doc", o.other_doc_path, "Document holding the second menu");

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo selection simulation");
  doc_opt(simulate);
  out_opt(simulate);
  scoring_opts(simulate);
  simulate->add_option("--menu", o.menu_id)->required();
  simulate->add_option("--trials", o.trials);
  simulate->add_option("--seed", o.seed);

  auto* serve = app.add_subcommand("serve", "Start the HTTP service");
  serve->add_option("--port", o.port)->check(CLI::Range(0, 65535));
  serve->add_option("--data-dir", o.data_dir, "Store root (default: $DATA_DIR or ./data)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) {
    reversed.pop_back();
  }
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner runner(o, out, err);
  try {
    apply_capacities(o.capacities);
    if (cmd_new->parsed()) {
      runner.cmd_new();
    } else if (creator->parsed()) {
      runner.cmd_creator();
    } else if (modify->parsed()) {
      runner.cmd_modify(action);
    } else if (validate->parsed()) {
      return runner.cmd_validate();
    } else if (layout_cmd->parsed()) {
      runner.cmd_layout();
    } else if (export_cmd->parsed()) {
      runner.cmd_export();
    } else if (analyze->parsed()) {
      runner.cmd_analyze();
    } else if (compare->parsed()) {
      runner.cmd_compare();
    } else if (simulate->parsed()) {
      runner.cmd_simulate();
    } else if (serve->parsed()) {
      return runner.cmd_serve();
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    for (const auto& v : e.violations()) {
      err << "  " << core::to_string(v.kind) << " " << v.node_id << ": " << v.detail << "\n";
    }
    return exit_code_for(e.code());
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace vrmenu::cli
