#pragma once

#include <memory>
#include <string>

#include "vrmenu/service/document_store.hpp"

namespace httplib {
class Server;
}

namespace vrmenu::service {

// HTTP/1.1 surface over a DocumentStore. Bodies use the document text
// notation (JSON); computed results are byte-identical to the CLI output.
//
//   GET    /documents/{id}                          document (ETag/X-Revision = revision)
//   PUT    /documents/{id}                          replace or create (If-Match: revision)
//   POST   /documents/{id}/menus                    CreateMenuRequest -> edit summary
//   PATCH  /documents/{id}/menus/{menuId}           {title?, active?}
//   POST   /documents/{id}/menus/{menuId}/buttons   ButtonSpec
//   PATCH  /documents/{id}/buttons/{buttonId}       {type?, subMenuRef?, functionId?, text?, iconRef?}
//   DELETE /documents/{id}/buttons/{buttonId}
//   GET    /documents/{id}/selection/{anyId}        {kind: menu|button|none}
//   GET    /documents/{id}/menus/{menuId}/layout    ?style=<StyleParams JSON>
//   GET    /documents/{id}/menus/{menuId}/usability ?a=&b=&viewer=x,y,z,dx,dy,dz&style=
//   GET    /documents/{id}/export                   ?style=
//   GET    /documents/{id}/events                   text/event-stream, ?since=<revision>
//
// Mutations honour an optional If-Match revision (409 on mismatch). Errors:
// 400 bad request, 404 unknown id, 409 conflict, 422 constraint violation.
class Server {
 public:
  explicit Server(DocumentStore& store);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen_after_bind();
  void stop();

 private:
  void install_routes();

  DocumentStore& store_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace vrmenu::service
