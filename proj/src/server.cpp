#include "reactor/server.hpp"

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include <deque>
#include <mutex>
#include <thread>
#include <vector>

#include "reactor/error.hpp"
#include "reactor/live_display.hpp"
#include "reactor/protocol.hpp"
#include "reactor/scenarios.hpp"

namespace reactor {

namespace {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

class Connection : public std::enable_shared_from_this<Connection> {
 public:
  explicit Connection(tcp::socket socket) : ws_(std::move(socket)) {}

  ~Connection() {
    if (display_) display_->disconnect();
    if (engine_.joinable()) {
      if (engine_.get_id() == std::this_thread::get_id()) {
        engine_.detach();
      } else {
        engine_.join();
      }
    }
  }

  void start() {
    net::dispatch(ws_.get_executor(), [self = shared_from_this()] { self->read_request(); });
  }

  // Safe from any thread.
  void interrupt_session() {
    std::lock_guard lock(display_mutex_);
    if (display_) display_->disconnect();
  }

  // Only once the io loop has stopped.
  void join_engine() {
    if (engine_.joinable() && engine_.get_id() != std::this_thread::get_id()) engine_.join();
  }

  // Safe from any thread.
  void send(const protocol::Message& m) {
    net::post(ws_.get_executor(), [self = shared_from_this(), text = protocol::encode_message(m)] {
      if (self->closed_) return;
      self->outbox_.push_back(std::move(text));
      if (self->outbox_.size() == 1) self->write_next();
    });
  }

 private:
  void read_request() {
    beast::get_lowest_layer(ws_).expires_after(std::chrono::seconds(30));
    http::async_read(ws_.next_layer(), buffer_, request_,
                     [self = shared_from_this()](beast::error_code ec, std::size_t) {
                       if (!ec) self->on_request();
                     });
  }

  void on_request() {
    if (request_.target() != "/session" || !websocket::is_upgrade(request_)) {
      reject(request_.target() != "/session" ? http::status::not_found
                                             : http::status::upgrade_required);
      return;
    }
    beast::get_lowest_layer(ws_).expires_never();
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.text(true);
    ws_.async_accept(request_, [self = shared_from_this()](beast::error_code ec) {
      if (ec) return;
      self->read_message();
    });
  }

  void reject(http::status status) {
    auto response = std::make_shared<http::response<http::string_body>>(status, request_.version());
    response->set(http::field::content_type, "text/plain");
    response->body() = "live sessions are served at /session over WebSocket\n";
    response->keep_alive(false);
    response->prepare_payload();
    http::async_write(ws_.next_layer(), *response,
                      [self = shared_from_this(), response](beast::error_code, std::size_t) {
                        beast::error_code ignored;
                        self->ws_.next_layer().socket().shutdown(tcp::socket::shutdown_send,
                                                                 ignored);
                      });
  }

  void read_message() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->on_disconnect();
        return;
      }
      std::string text = beast::buffers_to_string(self->buffer_.data());
      self->buffer_.consume(self->buffer_.size());
      self->handle(text);
      self->read_message();
    });
  }

  void on_disconnect() {
    closed_ = true;
    outbox_.clear();
    std::lock_guard lock(display_mutex_);
    if (display_) display_->disconnect();
  }

  void write_next() {
    ws_.async_write(net::buffer(outbox_.front()),
                    [self = shared_from_this()](beast::error_code ec, std::size_t) {
                      if (ec) {
                        self->on_disconnect();
                        return;
                      }
                      self->outbox_.pop_front();
                      if (!self->outbox_.empty()) self->write_next();
                    });
  }

  void handle(const std::string& text) {
    protocol::Message message;
    try {
      message = protocol::decode_message(text);
    } catch (const MalformedMessage& e) {
      send(protocol::ErrorReply{"MalformedMessage", e.what()});
      return;
    }
    std::visit([this](const auto& m) { on(m); }, message);
  }

  void on(const protocol::Start& m) {
    if (running_) {
      send(protocol::ErrorReply{"SessionActive", "a scenario is already running"});
      return;
    }
    std::optional<AnyReactor> reactor;
    try {
      reactor = scenarios::get_scenario(m.scenario).build(m.params);
    } catch (const UnknownScenario& e) {
      send(protocol::ErrorReply{"UnknownScenario", e.what()});
      return;
    } catch (const BadParameter& e) {
      send(protocol::ErrorReply{"BadParameter", e.what()});
      return;
    }
    if (engine_.joinable()) engine_.join();  // previous run already finished

    std::weak_ptr<Connection> weak = weak_from_this();
    auto display = std::make_shared<LiveDisplay>([weak](const protocol::Message& out) {
      if (auto self = weak.lock()) self->send(out);
    });
    {
      std::lock_guard lock(display_mutex_);
      display_ = display;
    }
    running_ = true;
    engine_ = std::thread([self = shared_from_this(), display, reactor = std::move(*reactor)] {
      try {
        AnyReactor final_value = reactor.interact(*display);
        self->send(protocol::Result{display->outermost_session(), final_value.value_json()});
      } catch (const std::exception& e) {
        self->send(protocol::ErrorReply{"RuntimeError", e.what()});
      }
      net::post(self->ws_.get_executor(), [self] { self->running_ = false; });
    });
  }

  void on(const protocol::Key& m) {
    std::lock_guard lock(display_mutex_);
    report(display_ ? display_->deliver_key(m.session_id, m.name) : LiveDisplay::Delivery::NoSession,
           "key", m.session_id);
  }

  void on(const protocol::Interrupt& m) {
    std::lock_guard lock(display_mutex_);
    report(display_ ? display_->deliver_interrupt(m.session_id) : LiveDisplay::Delivery::NoSession,
           "interrupt", m.session_id);
  }

  void on(const protocol::ListScenarios&) { send(protocol::ScenarioList{scenarios::list_scenarios()}); }

  template <class ServerOnly>
  void on(const ServerOnly& m) {
    send(protocol::ErrorReply{"MalformedMessage", "'" + std::string(protocol::message_type(m)) +
                                                      "' is not a client message"});
  }

  void report(LiveDisplay::Delivery d, const char* what, protocol::SessionId id) {
    if (d == LiveDisplay::Delivery::Accepted) return;
    send(protocol::Warning{std::string(what) + " for session " + std::to_string(id) +
                           " ignored: " + std::string(to_string(d))});
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> request_;
  std::deque<std::string> outbox_;
  bool closed_ = false;
  bool running_ = false;

  std::mutex display_mutex_;  // guards display_ for shutdown() from other threads
  std::shared_ptr<LiveDisplay> display_;
  std::thread engine_;
};

}  // namespace

struct Server::Impl {
  net::io_context ioc{1};
  tcp::acceptor acceptor{ioc};
  std::thread thread;
  bool stopped = false;
  std::mutex mutex;
  std::vector<std::weak_ptr<Connection>> connections;

  void accept() {
    acceptor.async_accept(net::make_strand(ioc), [this](beast::error_code ec, tcp::socket socket) {
      if (ec) return;  // acceptor closed
      auto c = std::make_shared<Connection>(std::move(socket));
      {
        std::lock_guard lock(mutex);
        std::erase_if(connections, [](const auto& w) { return w.expired(); });
        connections.push_back(c);
      }
      c->start();
      accept();
    });
  }
};

Server::Server(std::uint16_t port, const std::string& address) : impl_(std::make_unique<Impl>()) {
  tcp::endpoint endpoint(net::ip::make_address(address), port);
  auto& a = impl_->acceptor;
  a.open(endpoint.protocol());
  a.set_option(net::socket_base::reuse_address(true));
  a.bind(endpoint);
  a.listen(net::socket_base::max_listen_connections);
  impl_->accept();
}

Server::~Server() { stop(); }

std::uint16_t Server::port() const { return impl_->acceptor.local_endpoint().port(); }

void Server::start() {
  impl_->thread = std::thread([this] { impl_->ioc.run(); });
}

void Server::run() { impl_->ioc.run(); }

void Server::stop() {
  if (impl_->stopped) return;
  impl_->stopped = true;
  std::vector<std::shared_ptr<Connection>> live;
  {
    std::lock_guard lock(impl_->mutex);
    for (auto& w : impl_->connections) {
      if (auto c = w.lock()) live.push_back(std::move(c));
    }
    impl_->connections.clear();
  }
  for (auto& c : live) c->interrupt_session();
  impl_->ioc.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
  // The io loop is no longer running, so nothing else touches the connections.
  for (auto& c : live) c->join_engine();
  beast::error_code ignored;
  impl_->acceptor.close(ignored);
}

}  // namespace reactor
