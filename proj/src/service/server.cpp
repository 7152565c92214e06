#include "vrmenu/service/server.hpp"

#include <chrono>

#include "httplib.h"
#include "vrmenu/editor/editor.hpp"
#include "vrmenu/error.hpp"
#include "vrmenu/io/document_format.hpp"
#include "vrmenu/io/report_format.hpp"
#include "vrmenu/io/scene_export.hpp"
#include "vrmenu/layout/layout.hpp"
#include "vrmenu/usability/usability.hpp"

namespace vrmenu::service {

namespace {

constexpr const char* kJson = "application/json";
constexpr const char* kDocPattern = "/documents/([A-Za-z0-9_-]+)";

int status_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::kUnknownId:
    return 404;
  case ErrorCode::kRevisionConflict:
    return 409;
  case ErrorCode::kSyntax:
  case ErrorCode::kSchema:
  case ErrorCode::kInvalidArgument:
    return 400;
  case ErrorCode::kBadSubMenuRef:
  case ErrorCode::kDepthViolation:
  case ErrorCode::kCapacityExceeded:
  case ErrorCode::kInvalidMenu:
  case ErrorCode::kNonPositiveWidth:
  case ErrorCode::kBehindViewer:
  case ErrorCode::kEmptyMenu:
  case ErrorCode::kConstraint:
    return 422;
  }
  return 500;
}

void send_json(httplib::Response& res, const io::Json& body, int status = 200) {
  res.status = status;
  res.set_content(io::dump(body), kJson);
}

std::optional<std::uint64_t> if_match(const httplib::Request& req) {
  if (!req.has_header("If-Match")) {
    return std::nullopt;
  }
  std::string value = req.get_header_value("If-Match");
  if (value.rfind("W/", 0) == 0) {
    value = value.substr(2);
  }
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
    value = value.substr(1, value.size() - 2);
  }
  try {
    std::size_t used = 0;
    const unsigned long long revision = std::stoull(value, &used);
    if (used == value.size()) {
      return revision;
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument, "If-Match must carry a document revision");
}

void set_revision_headers(httplib::Response& res, std::uint64_t revision) {
  res.set_header("ETag", "\"" + std::to_string(revision) + "\"");
  res.set_header("X-Revision", std::to_string(revision));
}

// Wraps a handler so every Error becomes its JSON error body and status.
template <typename Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const Error& e) {
      send_json(res, io::error_json(e), status_for(e.code()));
    } catch (const io::Json::exception& e) {
      send_json(res, io::Json{{"error", "SchemaError"}, {"message", e.what()}, {"violations", io::Json::array()}},
                400);
    }
  };
}

layout::StyleParams style_from(const httplib::Request& req) {
  return req.has_param("style") ? io::parse_style(req.get_param_value("style")) : layout::StyleParams{};
}

// Applies several edits as one transaction: one revision step, one event.
editor::EditOutcome chain(const core::MenuDocument& doc,
                          const std::vector<std::function<editor::EditOutcome(const core::MenuDocument&)>>& steps) {
  if (steps.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "request changes nothing");
  }
  editor::EditOutcome total{doc, {}, {}, {}};
  for (const auto& step : steps) {
    editor::EditOutcome next = step(total.document);
    total.document = std::move(next.document);
    total.created_ids.insert(total.created_ids.end(), next.created_ids.begin(), next.created_ids.end());
    total.warnings.insert(total.warnings.end(), next.warnings.begin(), next.warnings.end());
    total.changed_ids.insert(total.changed_ids.end(), next.changed_ids.begin(), next.changed_ids.end());
  }
  total.document.revision = doc.revision + 1;
  return total;
}

}  // namespace

Server::Server(DocumentStore& store) : store_(store), http_(std::make_unique<httplib::Server>()) { install_routes(); }

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) {
    return http_->bind_to_any_port(host);
  }
  return http_->bind_to_port(host, port) ? port : -1;
}

bool Server::listen_after_bind() { return http_->listen_after_bind(); }

void Server::stop() {
  store_.shutdown();
  if (http_) {
    http_->stop();
  }
}

void Server::install_routes() {
  DocumentStore& store = store_;
  const std::string doc = kDocPattern;

  http_->Get(doc, guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const core::MenuDocument d = store.get(req.matches[1]);
               set_revision_headers(res, d.revision);
               res.set_content(io::serialize_document(d), kJson);
             }));

  http_->Put(doc, guarded([&store](const httplib::Request& req, httplib::Response& res) {
               core::MenuDocument incoming = io::parse_document(req.body);
               const core::MenuDocument stored = store.replace(req.matches[1], if_match(req), std::move(incoming));
               set_revision_headers(res, stored.revision);
               send_json(res, io::Json{{"revision", stored.revision}});
             }));

  http_->Post(doc + "/menus", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const editor::CreateMenuRequest create = io::parse_create_request(req.body);
                const auto outcome = store.mutate(req.matches[1], if_match(req), [&](const core::MenuDocument& d) {
                  return editor::create_menu(d, create);
                });
                set_revision_headers(res, outcome.document.revision);
                send_json(res, io::edit_summary_json(outcome));
              }));

  http_->Patch(doc + "/menus/([^/]+)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                 const io::Json body = io::parse_json(req.body);
                 io::ObjectReader r(body, "");
                 r.allow_only({"title", "active"});
                 const std::string menu_id = req.matches[2];
                 const auto title = r.optional_string("title");
                 const auto active = r.optional_boolean("active");
                 const auto outcome = store.mutate(req.matches[1], if_match(req), [&](const core::MenuDocument& d) {
                   std::vector<std::function<editor::EditOutcome(const core::MenuDocument&)>> steps;
                   if (title) {
                     steps.push_back([&](const core::MenuDocument& x) { return editor::set_menu_title(x, menu_id, *title); });
                   }
                   if (active && *active != d.menu(menu_id).active) {
                     steps.push_back([&](const core::MenuDocument& x) { return editor::toggle_menu_active(x, menu_id); });
                   }
                   return chain(d, steps);
                 });
                 set_revision_headers(res, outcome.document.revision);
                 send_json(res, io::edit_summary_json(outcome));
               }));

  http_->Post(doc + "/menus/([^/]+)/buttons", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const editor::ButtonSpec spec = io::parse_button_spec(req.body);
                const std::string menu_id = req.matches[2];
                const auto outcome = store.mutate(req.matches[1], if_match(req), [&](const core::MenuDocument& d) {
                  return editor::add_button(d, menu_id, spec);
                });
                set_revision_headers(res, outcome.document.revision);
                send_json(res, io::edit_summary_json(outcome));
              }));

  http_->Patch(doc + "/buttons/([^/]+)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                 const io::Json body = io::parse_json(req.body);
                 io::ObjectReader r(body, "");
                 r.allow_only({"type", "subMenuRef", "functionId", "text", "iconRef"});
                 const std::string button_id = req.matches[2];
                 std::optional<editor::ButtonTypeChange> type_change;
                 if (r.has("type")) {
                   const std::string type_text = r.string("type");
                   const auto type = core::parse_button_type(type_text);
                   if (!type) {
                     r.fail("type", "unknown button type '" + type_text + "'");
                   }
                   type_change = editor::ButtonTypeChange{*type, r.optional_string("subMenuRef"),
                                                          r.optional_string("functionId")};
                 } else if (r.has("subMenuRef") || r.has("functionId")) {
                   r.fail("type", "subMenuRef/functionId require type");
                 }
                 const auto text = r.optional_string("text");
                 const bool icon_given = body.contains("iconRef");
                 const auto icon = r.optional_string("iconRef");
                 const auto outcome = store.mutate(req.matches[1], if_match(req), [&](const core::MenuDocument& d) {
                   std::vector<std::function<editor::EditOutcome(const core::MenuDocument&)>> steps;
                   if (type_change) {
                     steps.push_back([&](const core::MenuDocument& x) { return editor::set_button_type(x, button_id, *type_change); });
                   }
                   if (text) {
                     steps.push_back([&](const core::MenuDocument& x) { return editor::set_button_text(x, button_id, *text); });
                   }
                   if (icon_given) {
                     steps.push_back([&](const core::MenuDocument& x) { return editor::set_button_icon(x, button_id, icon); });
                   }
                   return chain(d, steps);
                 });
                 set_revision_headers(res, outcome.document.revision);
                 send_json(res, io::edit_summary_json(outcome));
               }));

  http_->Delete(doc + "/buttons/([^/]+)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                  const std::string button_id = req.matches[2];
                  const auto outcome = store.mutate(req.matches[1], if_match(req), [&](const core::MenuDocument& d) {
                    return editor::remove_button(d, button_id);
                  });
                  set_revision_headers(res, outcome.document.revision);
                  send_json(res, io::edit_summary_json(outcome));
                }));

  http_->Get(doc + "/selection/([^/]+)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const core::MenuDocument d = store.get(req.matches[1]);
               send_json(res, io::Json{{"kind", editor::to_string(editor::resolve_selection(d, req.matches[2].str()))}});
             }));

  http_->Get(doc + "/menus/([^/]+)/layout", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const core::MenuDocument d = store.get(req.matches[1]);
               send_json(res, io::to_json(layout::layout(d.menu(req.matches[2].str()), style_from(req))));
             }));

  http_->Get(doc + "/menus/([^/]+)/usability", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const core::MenuDocument d = store.get(req.matches[1]);
               const core::MenuNode& menu = d.menu(req.matches[2].str());
               const layout::LayoutResult placed = layout::layout(menu, style_from(req));
               usability::FittsParams params;
               if (req.has_param("a") || req.has_param("b")) {
                 params = io::parse_params((req.has_param("a") ? req.get_param_value("a") : std::string("0")) + "," +
                                           (req.has_param("b") ? req.get_param_value("b") : std::string("1")));
               }
               const usability::ViewerConfig viewer = req.has_param("viewer")
                                                          ? io::parse_viewer(req.get_param_value("viewer"))
                                                          : usability::default_viewer(placed);
               send_json(res, io::to_json(usability::menu_usability_report(menu, placed, viewer, params)));
             }));

  http_->Get(doc + "/export", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const core::MenuDocument d = store.get(req.matches[1]);
               send_json(res, io::to_json(io::export_scene(d, style_from(req))));
             }));

  http_->Get(doc + "/events", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const std::string doc_id = req.matches[1];
               std::uint64_t last = store.get(doc_id).revision;
               const std::string since = req.has_param("since") ? req.get_param_value("since")
                                                                 : req.get_header_value("Last-Event-ID");
               if (!since.empty()) {
                 try {
                   last = std::stoull(since);
                 } catch (const std::exception&) {
                   throw Error(ErrorCode::kInvalidArgument, "since must be a revision number");
                 }
               }
               res.set_header("Cache-Control", "no-cache");
               res.set_chunked_content_provider(
                   "text/event-stream", [&store, doc_id, last](std::size_t, httplib::DataSink& sink) mutable {
                     if (store.is_shut_down()) {
                       sink.done();
                       return true;
                     }
                     const auto events = store.wait_events(doc_id, last, std::chrono::milliseconds(500));
                     if (events.empty()) {
                       static constexpr char kHeartbeat[] = ": keep-alive\n\n";
                       return sink.write(kHeartbeat, sizeof(kHeartbeat) - 1);
                     }
                     for (const auto& e : events) {
                       const io::Json data{{"revision", e.revision}, {"changedIds", e.changed_ids}};
                       const std::string frame = "id: " + std::to_string(e.revision) + "\nevent: change\ndata: " +
                                                 data.dump() + "\n\n";
                       if (!sink.write(frame.data(), frame.size())) {
                         return false;
                       }
                       last = e.revision;
                     }
                     return true;
                   });
             }));
}

}  // namespace vrmenu::service
