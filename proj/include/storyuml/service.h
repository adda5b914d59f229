// Copyright 2026 The storyuml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STORYUML_SERVICE_H_
#define STORYUML_SERVICE_H_

#include <filesystem>
#include <memory>
#include <string>

#include "storyuml/project.h"

namespace storyuml {

struct ServiceOptions {
  PipelineConfig config;
  // Projects are written here after every change; empty disables
  // persistence. Existing project files are loaded on construction.
  std::filesystem::path data_dir;
  // Built web UI assets served at "/". A placeholder page is served when
  // the directory does not exist.
  std::filesystem::path static_dir;
};

// JSON HTTP API over pipeline runs and edit sessions. Edits to one project
// are serialized; requests for distinct projects run concurrently.
class Service {
 public:
  explicit Service(ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds to host:port (port 0 picks a free one) and returns the bound port.
  int Bind(const std::string& host, int port);
  // Serves until Stop(). Requires Bind().
  void Run();
  // Bind() plus Run() on a background thread.
  int Start(const std::string& host, int port);
  void Stop();

  std::size_t project_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace storyuml

#endif  // STORYUML_SERVICE_H_
