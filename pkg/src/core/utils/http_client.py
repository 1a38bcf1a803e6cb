from pathlib import Path

from httpx import Client

from core.exceptions import UnexpectedResponse


class HTTPClient:
    """
    HTTP client for downloading files from a specified base URL.
    """

    def __init__(
        self, base_url: str | None = "", headers: dict[str, str] | None = None
    ) -> None:
        self.base_url = base_url
        self.headers = headers

    def download(
        self,
        url: str,
        destination: Path,
        path_params: dict[str, str] | None = None,
    ) -> Path:
        """
        Stream a GET response into a file.

        :param url: The URL to fetch.
        :param destination: File written with the response body.
        :param path_params: Path parameters formatted into the URL. Defaults to None.

        :return: The destination path.
        """
        if path_params:
            url = url.format(**path_params)
        destination.parent.mkdir(parents=True, exist_ok=True)
        with Client(
            base_url=self.base_url or "",
            headers=self.headers,
            timeout=None,
            follow_redirects=True,
        ) as session:
            with session.stream("GET", url) as response:
                if response.status_code != 200:
                    raise UnexpectedResponse(response=response)
                with destination.open("wb") as handle:
                    for chunk in response.iter_bytes():
                        handle.write(chunk)
        return destination
